#include "adlv/levi.hpp"

#include "adlv/errors.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

GeneralClassDatum::GeneralClassDatum(int d_, int h_, RelCocharacter newton_)
    : d(d_), h(h_), newton(std::move(newton_)) {
    if (d < 1 || h < 1 || newton.size() != static_cast<size_t>(h))
        throw std::invalid_argument("GeneralClassDatum: bad shape");
    if (!std::is_sorted(newton.begin(), newton.end()))
        throw std::invalid_argument("GeneralClassDatum: Newton point must be dominant");
    // Isoclinic block sums of d*nu must be integral.
    Rat partial = 0;
    for (int i = 0; i < h; ++i) {
        partial += newton[i] * d;
        bool boundary = (i + 1 == h) || newton[i + 1] != newton[i];
        if (boundary) {
            if (!rat_is_integral(partial))
                throw std::invalid_argument(
                    "GeneralClassDatum: block sums of d*nu must be integral");
            partial = 0;
        }
    }
    Rat total = 0;
    for (const Rat& s : newton) total += s * d;
    kappa = rat_to_int(total);
}

LeviPartition newton_levi(const GeneralClassDatum& datum) {
    LeviPartition partition;
    int i = 0;
    while (i < datum.h) {
        int j = i;
        while (j < datum.h && datum.newton[j] == datum.newton[i]) ++j;
        int height = j - i;
        Rat w = datum.newton[i] * datum.d * height;
        Int v = rat_to_int(w);
        Int g = std::gcd(std::abs(v), static_cast<Int>(height));
        if (g == 0) g = height;  // slope 0: split to rank-one pieces
        int piece_height = height / static_cast<int>(g);
        Int piece_v = v / g;
        for (Int k = 0; k < g; ++k) {
            partition.blocks.push_back(
                {i + static_cast<int>(k) * piece_height, piece_height, datum.newton[i], piece_v});
        }
        i = j;
    }
    return partition;
}

bool mazur_nonempty(const GCocharacter& mu, const GeneralClassDatum& datum) {
    if (mu.d != datum.d || mu.h != datum.h) throw std::invalid_argument("mazur: shape mismatch");
    if (!mu.is_dominant()) throw std::invalid_argument("mazur: mu must be dominant");
    if (mu.total() != datum.kappa) return false;
    return dominance_leq(scale(datum.newton, datum.d), orbit_sum(mu));
}

Int general_dim(const GCocharacter& mu, const GeneralClassDatum& datum) {
    if (!mazur_nonempty(mu, datum))
        throw MazurError("general_dim: X_mu(b) is empty for this pair");
    return dim_formula(mu, datum.newton, datum.d);
}

std::vector<GCocharacter> sigma_mu_set(const GCocharacter& mu) {
    if (!mu.is_dominant()) throw std::invalid_argument("sigma_mu_set: mu must be dominant");
    std::vector<std::vector<std::vector<Int>>> per_row(mu.d);
    for (int tau = 0; tau < mu.d; ++tau) per_row[tau] = rows_dominated_by(mu.rows[tau]);
    std::vector<GCocharacter> out;
    GCocharacter cur(mu.d, mu.h);
    auto rec = [&](auto&& self, int tau) -> void {
        if (tau == mu.d) {
            out.push_back(cur);
            return;
        }
        for (const auto& row : per_row[tau]) {
            cur.rows[tau] = row;
            self(self, tau + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
bool m_dominant(const GCocharacter& mu, const LeviPartition& partition) {
    for (const auto& r : mu.rows)
        for (const auto& block : partition.blocks)
            for (int i = block.start; i + 1 < block.start + block.height; ++i)
                if (r[i] > r[i + 1]) return false;
    return true;
}
}  // namespace

std::vector<GCocharacter> sigma_m_dom(const GCocharacter& mu, const LeviPartition& partition) {
    std::vector<GCocharacter> out;
    for (auto& elt : sigma_mu_set(mu))
        if (m_dominant(elt, partition)) out.push_back(std::move(elt));
    return out;
}

bool m_dominance_leq(const GCocharacter& mu2, const GCocharacter& mu1,
                     const LeviPartition& partition) {
    // mu1 - mu2 must be a non-negative combination of simple coroots of M:
    // within every block the partial sums of the difference are <= 0 with
    // block total 0, and entries outside blocks agree (blocks tile [0,h)).
    for (int tau = 0; tau < mu1.d; ++tau) {
        for (const auto& block : partition.blocks) {
            Int partial = 0;
            for (int i = block.start; i < block.start + block.height; ++i) {
                partial += mu1.rows[tau][i] - mu2.rows[tau][i];
                if (i + 1 < block.start + block.height) {
                    if (partial > 0) return false;
                } else if (partial != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<GCocharacter> sigma_m_max(const GCocharacter& mu, const LeviPartition& partition) {
    auto dom = sigma_m_dom(mu, partition);
    std::vector<GCocharacter> out;
    for (const auto& cand : dom) {
        bool maximal = true;
        for (const auto& other : dom)
            if (!(other == cand) && m_dominance_leq(cand, other, partition)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(cand);
    }
    return out;
}

Rat rho_m_pairing(const GCocharacter& x, const LeviPartition& partition) {
    BigInt doubled = 0;
    for (const auto& r : x.rows)
        for (const auto& block : partition.blocks)
            for (int i = 0; i < block.height; ++i)
                doubled += BigInt(2 * (i + 1) - (block.height + 1)) * r[block.start + i];
    return Rat(doubled, 2);
}

Rat rho_m_pairing_embedded(const RelCocharacter& nu, int d, const LeviPartition& partition) {
    Rat acc = 0;
    for (const auto& block : partition.blocks)
        for (int i = 0; i < block.height; ++i)
            acc += Rat(2 * (i + 1) - (block.height + 1), 2) * nu[block.start + i];
    return acc * d;
}

Int d_value(const GCocharacter& mu, const GCocharacter& mu_M, const LeviPartition& partition) {
    auto max_set = sigma_m_max(mu, partition);
    if (std::find(max_set.begin(), max_set.end(), mu_M) == max_set.end())
        throw std::invalid_argument(
            "d_value: only the equality regime (M-maximal mu_M) is supported");
    GCocharacter sum(mu.d, mu.h);
    for (int tau = 0; tau < mu.d; ++tau)
        for (int i = 0; i < mu.h; ++i) sum.rows[tau][i] = mu.rows[tau][i] + mu_M.rows[tau][i];
    Rat val = rho_pairing(sum) - 2 * rho_m_pairing(mu_M, partition);
    return rat_to_int(val);
}

Int levi_dim(const GCocharacter& mu_M, const GeneralClassDatum& datum,
             const LeviPartition& partition) {
    Int total = 0;
    for (const auto& block : partition.blocks) {
        GCocharacter mu_block(datum.d, block.height);
        for (int tau = 0; tau < datum.d; ++tau)
            for (int i = 0; i < block.height; ++i)
                mu_block.rows[tau][i] = mu_M.rows[tau][block.start + i];
        RelCocharacter nu_block(block.height, Rat(block.v, datum.d * block.height));
        total += dim_formula(mu_block, nu_block, datum.d);
    }
    return total;
}

RecursionReport recursion_check(const GCocharacter& mu, const GeneralClassDatum& datum) {
    if (!mazur_nonempty(mu, datum)) throw MazurError("recursion_check: empty variety");
    auto partition = newton_levi(datum);
    RecursionReport report;
    report.lhs = general_dim(mu, datum);

    // kappa_M fiber: per-block entry sums must match the block valuations.
    for (auto& mu_M : sigma_m_max(mu, partition)) {
        bool ok = true;
        for (const auto& block : partition.blocks) {
            Int sum = 0;
            for (int tau = 0; tau < mu.d; ++tau)
                for (int i = block.start; i < block.start + block.height; ++i)
                    sum += mu_M.rows[tau][i];
            if (sum != block.v) {
                ok = false;
                break;
            }
        }
        if (ok) report.fiber.push_back(mu_M);
    }
    if (report.fiber.empty())
        throw std::logic_error("recursion_check: empty kappa_M fiber despite Mazur");

    bool first = true;
    for (const auto& mu_M : report.fiber) {
        Int value = levi_dim(mu_M, datum, partition) + d_value(mu, mu_M, partition);
        if (first || value > report.sup_term) report.sup_term = value;
        first = false;
    }

    // nu is G-dominant here, so <rho, nu - nu_dom> vanishes; keep the term
    // explicit anyway.
    Rat nu_term = rho_pairing_embedded(datum.newton, datum.d) -
                  rho_pairing_embedded(dominant_sort(datum.newton), datum.d);
    Rat two_rho_n = 2 * (rho_pairing_embedded(datum.newton, datum.d) -
                         rho_m_pairing_embedded(datum.newton, datum.d, partition));
    report.correction = nu_term - two_rho_n;
    Rat rhs = Rat(report.sup_term) + report.correction;
    if (!rat_is_integral(rhs)) throw std::logic_error("recursion_check: non-integral RHS");
    report.rhs = rat_to_int(rhs);
    report.equal = report.rhs == report.lhs;
    return report;
}

}  // namespace adlv
