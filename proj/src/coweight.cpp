#include "adlv/coweight.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

RelCocharacter to_rel(const std::vector<Int>& v) {
    RelCocharacter out;
    out.reserve(v.size());
    for (Int x : v) out.emplace_back(x);
    return out;
}

RelCocharacter scale(const RelCocharacter& v, Int k) {
    RelCocharacter out = v;
    for (auto& x : out) x *= k;
    return out;
}

RelCocharacter operator-(const RelCocharacter& v) {
    RelCocharacter out = v;
    for (auto& x : out) x = -x;
    return out;
}

RelCocharacter operator-(const RelCocharacter& a, const RelCocharacter& b) {
    if (a.size() != b.size()) throw std::invalid_argument("RelCocharacter size mismatch");
    RelCocharacter out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

bool is_integral(const RelCocharacter& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return rat_is_integral(q); });
}

GCocharacter::GCocharacter(int d_, int h_, std::vector<std::vector<Int>> rows_)
    : d(d_), h(h_), rows(std::move(rows_)) {
    if (d < 1 || h < 1 || rows.size() != static_cast<size_t>(d))
        throw std::invalid_argument("GCocharacter: need d >= 1 rows");
    for (const auto& r : rows)
        if (r.size() != static_cast<size_t>(h))
            throw std::invalid_argument("GCocharacter: row length != h");
}

Int GCocharacter::total() const {
    Int s = 0;
    for (const auto& r : rows) s += std::accumulate(r.begin(), r.end(), Int{0});
    return s;
}

std::vector<Int> GCocharacter::row_sums() const {
    std::vector<Int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(std::accumulate(r.begin(), r.end(), Int{0}));
    return out;
}

bool GCocharacter::is_dominant() const {
    for (const auto& r : rows)
        if (!std::is_sorted(r.begin(), r.end())) return false;
    return true;
}

bool GCocharacter::is_nonnegative() const {
    for (const auto& r : rows)
        for (Int x : r)
            if (x < 0) return false;
    return true;
}

std::strong_ordering operator<=>(const GCocharacter& a, const GCocharacter& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = a.h <=> b.h; c != 0) return c;
    return a.rows <=> b.rows;
}

SuperbasicDatum::SuperbasicDatum(int d_, int h_, std::vector<Int> slopes_)
    : d(d_), h(h_), slopes(std::move(slopes_)) {
    if (d < 1 || h < 1) throw std::invalid_argument("SuperbasicDatum: need d, h >= 1");
    if (slopes.size() != static_cast<size_t>(d))
        throw std::invalid_argument("SuperbasicDatum: need one slope per Galois component");
    m = std::accumulate(slopes.begin(), slopes.end(), Int{0});
    if (std::gcd(m, static_cast<Int>(h)) != 1)
        throw std::invalid_argument("SuperbasicDatum: gcd(m, h) != 1, class is not superbasic");
}

SuperbasicDatum datum_from_mu(const GCocharacter& mu) {
    return SuperbasicDatum(mu.d, mu.h, mu.row_sums());
}

std::vector<Int> column_sums(const GCocharacter& mu) {
    std::vector<Int> out(mu.h, 0);
    for (const auto& r : mu.rows)
        for (int i = 0; i < mu.h; ++i) out[i] += r[i];
    return out;
}

RelCocharacter orbit_sum(const GCocharacter& mu) { return to_rel(column_sums(mu)); }

RelCocharacter dominant_sort(const RelCocharacter& v) {
    RelCocharacter out = v;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> dominant_sort(const std::vector<Int>& v) {
    std::vector<Int> out = v;
    std::sort(out.begin(), out.end());
    return out;
}

bool dominance_leq(const RelCocharacter& v1, const RelCocharacter& v2) {
    if (v1.size() != v2.size()) throw std::invalid_argument("dominance_leq: size mismatch");
    Rat p1 = 0, p2 = 0;
    for (size_t i = 0; i + 1 < v1.size(); ++i) {
        p1 += v1[i];
        p2 += v2[i];
        if (p1 < p2) return false;
    }
    if (!v1.empty()) {
        p1 += v1.back();
        p2 += v2.back();
    }
    return p1 == p2;
}

bool dominance_leq(const std::vector<Int>& v1, const std::vector<Int>& v2) {
    return dominance_leq(to_rel(v1), to_rel(v2));
}

bool g_dominance_leq(const GCocharacter& mu1, const GCocharacter& mu2) {
    if (mu1.d != mu2.d || mu1.h != mu2.h)
        throw std::invalid_argument("g_dominance_leq: shape mismatch");
    for (int tau = 0; tau < mu1.d; ++tau)
        if (!dominance_leq(to_rel(mu1.rows[tau]), to_rel(mu2.rows[tau]))) return false;
    return true;
}

std::vector<GCocharacter> weyl_orbit(const GCocharacter& mu) {
    // Distinct permutations per row, then the product over rows.
    std::vector<std::vector<std::vector<Int>>> row_perms(mu.d);
    for (int tau = 0; tau < mu.d; ++tau) {
        auto r = dominant_sort(mu.rows[tau]);
        do {
            row_perms[tau].push_back(r);
        } while (std::next_permutation(r.begin(), r.end()));
    }
    std::vector<GCocharacter> orbit;
    std::vector<size_t> idx(mu.d, 0);
    while (true) {
        GCocharacter elt(mu.d, mu.h);
        for (int tau = 0; tau < mu.d; ++tau) elt.rows[tau] = row_perms[tau][idx[tau]];
        orbit.push_back(std::move(elt));
        int tau = mu.d - 1;
        while (tau >= 0 && ++idx[tau] == row_perms[tau].size()) idx[tau--] = 0;
        if (tau < 0) break;
    }
    return orbit;
}

bool is_minuscule(const GCocharacter& mu) {
    for (const auto& r : mu.rows) {
        auto [lo, hi] = std::minmax_element(r.begin(), r.end());
        if (*hi - *lo > 1) return false;
    }
    return true;
}

RelCocharacter newton_point(const SuperbasicDatum& datum) {
    return RelCocharacter(datum.h, Rat(datum.m, static_cast<Int>(datum.d) * datum.h));
}

bool kappa_match(const GCocharacter& mu, const SuperbasicDatum& datum) {
    return mu.total() == datum.m;
}

std::vector<std::vector<Int>> rows_dominated_by(const std::vector<Int>& row) {
    if (!std::is_sorted(row.begin(), row.end()))
        throw std::invalid_argument("rows_dominated_by: row must be dominant");
    const int h = static_cast<int>(row.size());
    const Int lo = row.front(), hi = row.back();
    const Int total = std::accumulate(row.begin(), row.end(), Int{0});
    // lambda_dom <= row in dominance forces min(lambda) >= lo and
    // max(lambda) <= hi, so the box [lo, hi]^h is exhaustive.
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(h);
    auto rec = [&](auto&& self, int pos, Int sum) -> void {
        if (pos == h) {
            if (sum == total && dominance_leq(dominant_sort(cur), row)) out.push_back(cur);
            return;
        }
        Int rest = h - 1 - pos;
        for (Int x = lo; x <= hi; ++x) {
            // Remaining entries are each within [lo, hi].
            if (sum + x + rest * lo > total || sum + x + rest * hi < total) continue;
            cur[pos] = x;
            self(self, pos + 1, sum + x);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace adlv
