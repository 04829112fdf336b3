#include "adlv/components.hpp"

#include "adlv/errors.hpp"

#include <algorithm>
#include <map>

namespace adlv {

namespace {

// Successor pairs of component tau for a cyclic chart, sorted by generator
// value: (b~_{tau,i}, suc(b~_{tau,i}), mu~_{tau+1,i}).
struct SortedPairs {
    std::vector<Int> b;        // increasing
    std::vector<Int> suc;      // values in component tau+1
    std::vector<Int> mu_tilde; // type entries carried along
};

std::vector<SortedPairs> sorted_successor_pairs(const ExtendedELChart& ext) {
    if (!is_cyclic(ext)) throw std::invalid_argument("expected a cyclic chart");
    const ELChart& chart = ext.chart();
    const int d = chart.d(), h = chart.h();
    auto tv = type_of(chart);
    std::vector<SortedPairs> out(d);
    for (int tau = 0; tau < d; ++tau) {
        std::vector<std::pair<Int, std::pair<Int, Int>>> pairs;  // (b, (suc, mu))
        for (int i = 1; i <= h; ++i) {
            int k = tau + (i - 1) * d;
            IndexedInt b = tv.chain[k];
            IndexedInt suc = tv.chain[(k + 1) % (d * h)];
            Int mu = tv.type.rows[(tau + 1) % d][i - 1];
            pairs.push_back({b.value, {suc.value, mu}});
        }
        std::sort(pairs.begin(), pairs.end());
        for (auto& [b, rest] : pairs) {
            out[tau].b.push_back(b);
            out[tau].suc.push_back(rest.first);
            out[tau].mu_tilde.push_back(rest.second);
        }
    }
    return out;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

GCocharacter tilde_mu(const ExtendedELChart& ext) {
    const int d = ext.chart().d(), h = ext.chart().h();
    auto pairs = sorted_successor_pairs(ext);
    GCocharacter out(d, h);
    for (int tau = 0; tau < d; ++tau) out.rows[(tau + 1) % d] = pairs[tau].mu_tilde;
    return out;
}

S1S2 s1_s2_decomposition(const ExtendedELChart& ext) {
    const int d = ext.chart().d(), h = ext.chart().h();
    auto pairs = sorted_successor_pairs(ext);
    S1S2 out;
    for (int tau = 0; tau < d; ++tau)
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                out.s1 += std::max<Int>(pairs[tau].mu_tilde[i] - pairs[tau].mu_tilde[j], 0);
                out.s2 += std::max<Int>(
                    floor_div(pairs[tau].suc[i] - pairs[tau].suc[j], h), 0);
            }
    return out;
}

PsiChainReport psi_chain(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    const int d = chart.d(), h = chart.h();
    auto pairs = sorted_successor_pairs(ext);
    PsiChainReport report;

    // psi^i pairs b~_{tau,j} with suc_i(b~_{tau,j}): the successors of the
    // first i generators re-sorted increasing, the rest untouched.
    auto psi_hat = [&](int i) {
        RelCocharacter cols(h, Rat(0));
        for (int tau = 0; tau < d; ++tau) {
            std::vector<Int> suc_i = pairs[tau].suc;
            std::sort(suc_i.begin(), suc_i.begin() + i);
            Int m_next = chart.datum().slopes[(tau + 1) % d];
            for (int j = 0; j < h; ++j)
                cols[j] += Rat(pairs[tau].b[j] + m_next - suc_i[j], h);
        }
        return cols;
    };
    for (int i = 1; i <= h; ++i) report.psi_hat.push_back(psi_hat(i));

    RelCocharacter tilde_cols = orbit_sum(tilde_mu(ext));
    RelCocharacter nu_cols(h, Rat(chart.datum().m, h));
    report.endpoints_ok =
        report.psi_hat.front() == tilde_cols && report.psi_hat.back() == nu_cols;
    report.orientation = report.endpoints_ok
                             ? "psi^1 = orbit_sum(mu_tilde), psi^h = d*nu"
                             : (report.psi_hat.front() == nu_cols &&
                                        report.psi_hat.back() == tilde_cols
                                    ? "psi^1 = d*nu, psi^h = orbit_sum(mu_tilde)"
                                    : "unrecognized");
    if (report.orientation == "unrecognized") report.endpoints_ok = false;

    for (int i = 2; i <= h; ++i) {
        const auto& lower = report.psi_hat[i - 2];
        const auto& upper = report.psi_hat[i - 1];
        if (!dominance_leq(upper, lower)) report.monotone = false;
        Polygon p_lo(lower), p_hi(upper);
        Int count = 0;
        for (int x = 1; x < h; ++x)
            count += std::max<Int>(rat_floor(p_hi.at(x)) - rat_floor(p_lo.at(x)), 0);
        Int bound = 0;
        for (int tau = 0; tau < d; ++tau)
            for (int j = 0; j < i - 1; ++j)
                bound += std::max<Int>(
                    floor_div(pairs[tau].suc[j] - pairs[tau].suc[i - 1], h), 0);
        report.step_lattice_counts.push_back(count);
        report.step_bounds.push_back(bound);
        if (count < bound) report.step_bounds_hold = false;
        report.total_lattice += count;
    }
    return report;
}

Int component_count(const GCocharacter& mu, const SuperbasicDatum& datum) {
    return static_cast<Int>(top_charts(mu, datum).size());
}

Lemma7Report lemma7_checks(const GCocharacter& mu, const SuperbasicDatum& datum) {
    if (!mu.is_dominant() || !mu.is_nonnegative())
        throw std::invalid_argument("lemma7_checks: mu must be dominant and >= 0");
    std::vector<int> nonconstant;
    for (int tau = 0; tau < mu.d; ++tau)
        if (mu.rows[tau].front() != mu.rows[tau].back()) nonconstant.push_back(tau);

    Lemma7Report report;
    if (nonconstant.size() >= 2) {
        report.part = 1;
        RelCocharacter nu = newton_point(datum);
        Int target = pairing_g(nu, mu);

        // Cyclic witnesses: the canonical chart of type mu, plus the charts
        // obtained by re-anchoring the same chain at the other components.
        std::vector<ExtendedELChart> witnesses;
        witnesses.push_back(cyclic_phi(chart_from_type(mu, datum)));
        for (int anchor = 1; anchor < mu.d; ++anchor) {
            GCocharacter relabeled(mu.d, mu.h);
            for (int tau = 0; tau < mu.d; ++tau)
                relabeled.rows[tau] = mu.rows[(tau + anchor) % mu.d];
            witnesses.push_back(cyclic_phi(chart_from_type_anchored(relabeled, datum, anchor)));
        }
        std::vector<GCocharacter> distinct_tops;
        for (auto& w : witnesses) {
            if (v_dim(w) != target || hodge_point(w) != mu) continue;
            auto type = type_of(w.chart()).type;
            if (std::find(distinct_tops.begin(), distinct_tops.end(), type) ==
                distinct_tops.end())
                distinct_tops.push_back(type);
        }
        report.witness_types = std::move(distinct_tops);
        report.top_count = component_count(mu, datum);
        report.pass = report.witness_types.size() >= 2 && report.top_count >= 2;
        return report;
    }
    if (nonconstant.size() == 1 && mu.d >= 2) {
        report.part = 2;
        int tau = nonconstant.front();
        auto full = enumerate_charts(mu, datum);
        GCocharacter row_mu(1, mu.h, {mu.rows[tau]});
        SuperbasicDatum row_datum(1, mu.h, {row_mu.total()});
        auto row = enumerate_charts(row_mu, row_datum);
        auto dims_full = full.dims;
        auto dims_row = row.dims;
        std::sort(dims_full.begin(), dims_full.end());
        std::sort(dims_row.begin(), dims_row.end());
        report.dims_match = dims_full == dims_row;
        report.count_d = std::count(full.dims.begin(), full.dims.end(), full.max_dim);
        report.count_d1 = std::count(row.dims.begin(), row.dims.end(), row.max_dim);
        report.pass = report.dims_match && report.count_d == report.count_d1;
        return report;
    }
    throw std::invalid_argument("lemma7_checks: hypotheses not met (need d >= 2 and at least "
                                "one non-constant row)");
}

ConjectureReport conjecture_report(const GCocharacter& mu, const SuperbasicDatum& datum) {
    if (!is_minuscule(mu)) throw std::invalid_argument("conjecture_report: mu must be minuscule");
    if (!kappa_match(mu, datum))
        throw KappaMismatchError("conjecture_report: Kottwitz points differ");

    ConjectureReport report;
    report.mu = mu;
    auto result = enumerate_charts(mu, datum);
    report.chart_count = static_cast<Int>(result.charts.size());
    report.top_count = std::count(result.dims.begin(), result.dims.end(), result.max_dim);

    RelCocharacter d_nu = scale(newton_point(datum), datum.d);
    RelCocharacter mu_cols = orbit_sum(mu);
    for (const auto& ext : result.charts) {
        GCocharacter image = tilde_mu(ext);
        RelCocharacter cols = orbit_sum(image);
        if (!(dominance_leq(d_nu, cols) && dominance_leq(cols, mu_cols)))
            report.sandwich_all = false;
        report.tilde_images.push_back(std::move(image));
    }
    for (size_t i = 0; i < report.tilde_images.size(); ++i)
        for (size_t j = i + 1; j < report.tilde_images.size(); ++j)
            if (report.tilde_images[i] == report.tilde_images[j]) report.tilde_injective = false;

    // Conjectured orbit-sum profile of the top charts: floor(m/h) repeated
    // h - (m mod h) times, then ceil(m/h) repeated m mod h times.
    Int q = floor_div(datum.m, datum.h);
    Int r = datum.m - q * datum.h;
    std::vector<Int> profile;
    for (Int i = 0; i < datum.h - r; ++i) profile.push_back(q);
    for (Int i = 0; i < r; ++i) profile.push_back(q + 1);

    auto orbit = weyl_orbit(mu);
    std::vector<GCocharacter> orbit_sandwich;
    for (const auto& elt : orbit) {
        auto cols = orbit_sum(elt);
        if (dominance_leq(d_nu, cols)) {
            ++report.orbit_count;
            orbit_sandwich.push_back(elt);
        }
        if (cols == to_rel(profile)) ++report.predicted_top;
    }
    for (const auto& image : report.tilde_images)
        if (std::find(orbit_sandwich.begin(), orbit_sandwich.end(), image) ==
            orbit_sandwich.end())
            report.tilde_into_orbit_set = false;

    report.bijection_matches = report.chart_count == report.orbit_count &&
                               report.tilde_injective && report.tilde_into_orbit_set;
    report.top_matches = report.top_count == report.predicted_top;
    return report;
}

}  // namespace adlv
