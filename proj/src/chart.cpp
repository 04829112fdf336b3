#include "adlv/chart.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

namespace {
Int pos_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}
}  // namespace

IndexedInt f_step(const IndexedInt& a, const SuperbasicDatum& datum) {
    int next = (a.tau + 1) % datum.d;
    return {next, a.value + datum.slopes[next]};
}

ELChart::ELChart(SuperbasicDatum datum, std::vector<std::vector<Int>> generators)
    : datum_(std::move(datum)), gens_(std::move(generators)) {
    const int d = datum_.d, h = datum_.h;
    if (gens_.size() != static_cast<size_t>(d))
        throw std::invalid_argument("ELChart: need one generator list per component");
    class_gens_.assign(d, std::vector<Int>(h));
    for (int tau = 0; tau < d; ++tau) {
        auto& g = gens_[tau];
        if (g.size() != static_cast<size_t>(h))
            throw std::invalid_argument("ELChart: each component needs h generators");
        std::sort(g.begin(), g.end());
        std::vector<bool> seen(h, false);
        for (Int b : g) {
            Int r = pos_mod(b, h);
            if (seen[r])
                throw std::invalid_argument("ELChart: residue class hit twice in one component");
            seen[r] = true;
            class_gens_[tau][r] = b;
        }
    }
    for (int tau = 0; tau < d; ++tau)
        for (Int b : gens_[tau])
            if (!contains(f_step({tau, b}, datum_)))
                throw std::invalid_argument("ELChart: generator set is not f-stable");
}

Int ELChart::class_gen(int tau, Int value) const {
    return class_gens_[tau][pos_mod(value, datum_.h)];
}

bool ELChart::contains(const IndexedInt& a) const {
    return a.value >= class_gen(a.tau, a.value);
}

Int ELChart::height(const IndexedInt& a) const {
    Int g = class_gen(a.tau, a.value);
    if (a.value < g) throw std::invalid_argument("height: element not in chart");
    return (a.value - g) / datum_.h;
}

std::vector<Int> ELChart::low_values(int tau) const {
    std::vector<Int> out;
    Int threshold = forced_threshold(tau);
    for (Int g : gens_[tau])
        for (Int a = g; a < threshold; a += datum_.h) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<ELChart, Int> normalize(const SuperbasicDatum& datum,
                                  const std::vector<std::vector<Int>>& raw_generators) {
    if (raw_generators.empty() || raw_generators[0].size() != static_cast<size_t>(datum.h))
        throw std::invalid_argument("normalize: malformed generator set");
    Int sum0 = std::accumulate(raw_generators[0].begin(), raw_generators[0].end(), Int{0});
    Int target = static_cast<Int>(datum.h) * (datum.h - 1) / 2;
    if ((target - sum0) % datum.h != 0)
        throw std::invalid_argument("normalize: component-0 residues do not cover Z/h");
    Int shift = (target - sum0) / datum.h;
    auto shifted = raw_generators;
    for (auto& comp : shifted)
        for (auto& b : comp) b += shift;
    return {ELChart(datum, std::move(shifted)), shift};
}

TypeVector type_of(const ELChart& chart) {
    const int d = chart.d(), h = chart.h();
    const int n = d * h;
    std::vector<IndexedInt> chain;
    chain.reserve(n);
    std::vector<Int> mu_cyc(n + 1, 0);  // mu_cyc[k] consumed on the step k-1 -> k
    IndexedInt cur{0, chart.min_gen(0)};
    chain.push_back(cur);
    for (int k = 1; k <= n; ++k) {
        IndexedInt img = f_step(cur, chart.datum());
        Int gen = chart.class_gen(img.tau, img.value);
        mu_cyc[k] = (img.value - gen) / h;
        cur = {img.tau, gen};
        if (k < n) chain.push_back(cur);
    }
    if (!(cur == chain.front()))
        throw std::logic_error("type_of: successor chain failed to close");
    GCocharacter type(d, h);
    for (int k = 1; k <= n; ++k) {
        int tau = k % d;
        int i = (tau != 0) ? (k - tau) / d + 1 : k / d;
        type.rows[tau][i - 1] = mu_cyc[k];
    }
    return {std::move(type), std::move(chain)};
}

bool is_valid_type(const GCocharacter& mu_prime, const SuperbasicDatum& datum) {
    if (mu_prime.d != datum.d || mu_prime.h != datum.h) return false;
    if (!mu_prime.is_nonnegative()) return false;  // f-stability fails otherwise
    auto cols = column_sums(mu_prime);
    Int partial = 0;
    for (int k = 1; k < datum.h; ++k) {
        partial += cols[k - 1];
        if (partial * datum.h > static_cast<Int>(k) * datum.m) return false;
    }
    return partial + cols[datum.h - 1] == datum.m;
}

namespace {
// Runs the successor recursion from value 0 in component 0 and returns the
// per-component generator values (unnormalized).
std::vector<std::vector<Int>> chain_values(const GCocharacter& mu_prime,
                                           const SuperbasicDatum& datum) {
    const int d = datum.d, h = datum.h, n = d * h;
    std::vector<Int> mu_cyc(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        int tau = k % d;
        int i = (tau != 0) ? (k - tau) / d + 1 : k / d;
        mu_cyc[k] = mu_prime.rows[tau][i - 1];
    }
    std::vector<std::vector<Int>> gens(d);
    IndexedInt cur{0, 0};
    gens[0].push_back(0);
    for (int k = 1; k < n; ++k) {
        IndexedInt img = f_step(cur, datum);
        cur = {img.tau, img.value - mu_cyc[k] * h};
        gens[cur.tau].push_back(cur.value);
    }
    return gens;
}
}  // namespace

ELChart chart_from_type(const GCocharacter& mu_prime, const SuperbasicDatum& datum) {
    if (!is_valid_type(mu_prime, datum))
        throw std::invalid_argument("chart_from_type: not a valid type for this datum");
    auto [chart, shift] = normalize(datum, chain_values(mu_prime, datum));
    (void)shift;
    return chart;
}

ELChart chart_from_type_anchored(const GCocharacter& mu_prime, const SuperbasicDatum& datum,
                                 int anchor) {
    const int d = datum.d;
    anchor = ((anchor % d) + d) % d;
    std::vector<Int> relabeled_slopes(d);
    for (int tau = 0; tau < d; ++tau) relabeled_slopes[tau] = datum.slopes[(tau + anchor) % d];
    SuperbasicDatum relabeled(d, datum.h, std::move(relabeled_slopes));
    if (!is_valid_type(mu_prime, relabeled))
        throw std::invalid_argument("chart_from_type_anchored: not a valid type at this anchor");
    auto relative = chain_values(mu_prime, relabeled);
    std::vector<std::vector<Int>> gens(d);
    for (int tau = 0; tau < d; ++tau) gens[(tau + anchor) % d] = std::move(relative[tau]);
    return normalize(datum, gens).first;
}

}  // namespace adlv
