#include "adlv/extended.hpp"

#include <algorithm>

namespace adlv {

ExtendedELChart::ExtendedELChart(ELChart chart, std::vector<std::map<Int, Int>> phi_low)
    : chart_(std::move(chart)), phi_low_(std::move(phi_low)) {
    const int d = chart_.d();
    if (phi_low_.size() != static_cast<size_t>(d))
        throw std::invalid_argument("ExtendedELChart: need one phi table per component");
    for (int tau = 0; tau < d; ++tau) {
        auto expected = low_values(tau);
        if (phi_low_[tau].size() != expected.size())
            throw std::invalid_argument("ExtendedELChart: phi table domain is not A_low");
        for (Int a : expected) {
            auto it = phi_low_[tau].find(a);
            if (it == phi_low_[tau].end())
                throw std::invalid_argument("ExtendedELChart: phi table domain is not A_low");
            if (it->second < 0)
                throw std::invalid_argument("ExtendedELChart: phi takes non-negative values");
        }
    }
}

std::vector<Int> ExtendedELChart::low_values(int tau) const { return chart_.low_values(tau); }

std::optional<Int> ExtendedELChart::phi(const IndexedInt& a) const {
    if (!chart_.contains(a)) return std::nullopt;
    if (a.value < chart_.forced_threshold(a.tau)) return phi_low_[a.tau].at(a.value);
    return chart_.height(f_step(a, datum()));
}

Int ExtendedELChart::phi_at(const IndexedInt& a) const {
    auto p = phi(a);
    if (!p) throw std::invalid_argument("phi_at: element not in chart");
    return *p;
}

Int ExtendedELChart::max_low_phi() const {
    Int best = 0;
    for (const auto& table : phi_low_)
        for (const auto& [a, p] : table) best = std::max(best, p);
    return best;
}

ExtendedELChart cyclic_phi(const ELChart& chart) {
    std::vector<std::map<Int, Int>> tables(chart.d());
    for (int tau = 0; tau < chart.d(); ++tau) {
        Int threshold = chart.forced_threshold(tau);
        for (Int g : chart.gens(tau))
            for (Int a = g; a < threshold; a += chart.h())
                tables[tau][a] = chart.height(f_step({tau, a}, chart.datum()));
    }
    return ExtendedELChart(chart, std::move(tables));
}

namespace {

// Level at which every ladder of component tau has entered the forced region;
// level counts equal h from here on.
Int stable_level(const ExtendedELChart& ext, int tau) {
    const ELChart& chart = ext.chart();
    Int best = 0;
    for (const auto& [a, p] : ext.phi_low()[tau]) {
        (void)a;
        best = std::max(best, p);
    }
    Int threshold = chart.forced_threshold(tau);
    for (Int a = threshold; a < threshold + chart.h(); ++a)
        best = std::max(best, ext.phi_at({tau, a}));
    return best;
}

// All (value, phi) pairs of component tau with value in
// [min gen, max gen + h * steps], increasing in value.
std::vector<std::pair<Int, Int>> window_values(const ExtendedELChart& ext, int tau, Int steps) {
    const ELChart& chart = ext.chart();
    std::vector<std::pair<Int, Int>> out;
    Int hi = chart.max_gen(tau) + chart.h() * steps;
    for (Int a = chart.min_gen(tau); a <= hi; ++a)
        if (chart.contains({tau, a})) out.emplace_back(a, ext.phi_at({tau, a}));
    return out;
}

}  // namespace

std::vector<std::string> validate(const ExtendedELChart& ext) {
    std::vector<std::string> violations;
    const ELChart& chart = ext.chart();
    const int h = chart.h();
    auto note = [&](std::string msg) { violations.push_back(std::move(msg)); };

    for (int tau = 0; tau < chart.d(); ++tau) {
        for (Int a : ext.low_values(tau)) {
            Int pa = ext.phi_at({tau, a});
            Int pah = ext.phi_at({tau, a + h});
            if (pah < pa + 1)
                note("(b) fails at tau=" + std::to_string(tau) + ", a=" + std::to_string(a));
            Int cap = chart.height(f_step({tau, a}, chart.datum()));
            if (pa > cap)
                note("(c) fails at tau=" + std::to_string(tau) + ", a=" + std::to_string(a));
        }

        // (d): |{c >= a} ∩ phi^{-1}(n)| <= |{c >= a+h} ∩ phi^{-1}(n+1)|.
        // For n above the stored maximum every element of level n is in the
        // forced region, where +h raises phi by exactly 1, so the inequality
        // holds by injection; checking n <= max stored phi + 1 is exhaustive.
        // Positions a below min(A) are dominated by a = min(A), and positions
        // between elements by the next element, so scanning A suffices.
        Int n_max = ext.max_low_phi() + 1;
        auto win = window_values(ext, tau, n_max + 2);
        for (Int n = 0; n <= n_max; ++n) {
            // Suffix counts of levels n and n+1 over descending a.
            Int count_n = 0, count_n1 = 0;
            std::vector<std::tuple<Int, Int, Int>> suffix;  // (a, |>=a level n|, |>=a level n+1|)
            for (auto it = win.rbegin(); it != win.rend(); ++it) {
                if (it->second == n) ++count_n;
                if (it->second == n + 1) ++count_n1;
                suffix.emplace_back(it->first, count_n, count_n1);
            }
            for (auto& [a, cn, cn1] : suffix) {
                // |{c >= a+h} ∩ level n+1| = |{c >= a} ∩ level n+1| minus the
                // elements of the window in [a, a+h).
                Int adjustment = 0;
                for (Int c = a; c < a + h; ++c)
                    if (chart.contains({tau, c}) && ext.phi_at({tau, c}) == n + 1) ++adjustment;
                if (cn > cn1 - adjustment) {
                    note("(d) fails at tau=" + std::to_string(tau) + ", a=" + std::to_string(a) +
                         ", n=" + std::to_string(n));
                    break;
                }
            }
        }
    }
    return violations;
}

GCocharacter hodge_point(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    const int h = chart.h();
    GCocharacter mu(chart.d(), h);
    for (int tau = 0; tau < chart.d(); ++tau) {
        Int n_max = stable_level(ext, tau) + 1;
        auto win = window_values(ext, tau, n_max + 2);
        std::vector<Int> level_counts(n_max + 1, 0);
        for (auto& [a, p] : win) {
            (void)a;
            if (p <= n_max) ++level_counts[p];
        }
        std::vector<Int> row;
        Int prev = 0;
        for (Int n = 0; n <= n_max; ++n) {
            Int mult = level_counts[n] - prev;
            if (mult < 0)
                throw std::logic_error("hodge_point: level counts decrease, axiom (d) violated");
            for (Int k = 0; k < mult; ++k) row.push_back(n);
            prev = level_counts[n];
        }
        if (static_cast<int>(row.size()) != h || level_counts[n_max] != h)
            throw std::logic_error("hodge_point: level counts failed to stabilize at h");
        mu.rows[tau] = std::move(row);
    }
    return mu;
}

bool is_cyclic(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    for (int tau = 0; tau < chart.d(); ++tau)
        for (Int a : ext.low_values(tau))
            if (ext.phi_at({tau, a}) != chart.height(f_step({tau, a}, chart.datum())))
                return false;
    return true;
}

std::vector<std::pair<IndexedInt, IndexedInt>> v_set(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    const int h = chart.h();
    std::vector<std::pair<IndexedInt, IndexedInt>> pairs;
    for (int tau = 0; tau < chart.d(); ++tau) {
        // Pairs require phi(a) - phi(a-h) >= 2 or a in B, which confines a to
        // values at most the top generator: above it the ladder steps by 1.
        for (Int a = chart.min_gen(tau); a <= chart.max_gen(tau); ++a) {
            if (!chart.contains({tau, a})) continue;
            Int pa = ext.phi_at({tau, a});
            Int floor_phi = -1;  // phi(a-h), with -1 standing for -infinity
            if (chart.contains({tau, a - h})) floor_phi = ext.phi_at({tau, a - h});
            if (pa - floor_phi < 2 && floor_phi >= 0) continue;
            if (pa < 1 && floor_phi < 0) continue;
            // phi(c) >= height(c), so phi(c) < pa bounds the scan.
            Int c_hi = chart.max_gen(tau) + h * std::max<Int>(pa - 1, 0);
            for (Int c = a + 1; c <= c_hi; ++c) {
                if (!chart.contains({tau, c})) continue;
                Int pc = ext.phi_at({tau, c});
                if (pc < pa && pc > floor_phi) pairs.push_back({{tau, a}, {tau, c}});
            }
        }
    }
    return pairs;
}

Int v_dim(const ExtendedELChart& ext) { return static_cast<Int>(v_set(ext).size()); }

std::vector<std::pair<IndexedInt, IndexedInt>> v_set_bruteforce(const ExtendedELChart& ext,
                                                                Int margin) {
    const ELChart& chart = ext.chart();
    const int h = chart.h();
    Int required = 0;
    for (int tau = 0; tau < chart.d(); ++tau)
        for (Int a = chart.min_gen(tau); a <= chart.max_gen(tau); ++a)
            if (chart.contains({tau, a})) required = std::max(required, ext.phi_at({tau, a}));
    if (margin < required + 1)
        throw std::invalid_argument("v_set_bruteforce: margin below the safe bound " +
                                    std::to_string(required + 1));
    std::vector<std::pair<IndexedInt, IndexedInt>> pairs;
    for (int tau = 0; tau < chart.d(); ++tau) {
        std::vector<Int> window;
        for (Int a = chart.min_gen(tau); a <= chart.max_gen(tau) + h * margin; ++a)
            if (chart.contains({tau, a})) window.push_back(a);
        for (Int a : window)
            for (Int c : window) {
                if (a >= c) continue;
                Int pa = ext.phi_at({tau, a});
                Int pc = ext.phi_at({tau, c});
                Int floor_phi = chart.contains({tau, a - h}) ? ext.phi_at({tau, a - h}) : -1;
                if (pa > pc && pc > floor_phi) pairs.push_back({{tau, a}, {tau, c}});
            }
    }
    return pairs;
}

AdaptedFamily adapted_family(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    const int h = chart.h();
    AdaptedFamily fam;
    fam.sequences.resize(chart.d());
    for (int tau = 0; tau < chart.d(); ++tau) {
        Int n_hi = stable_level(ext, tau) + 1;
        auto win = window_values(ext, tau, n_hi + 2);
        std::vector<std::vector<Int>> by_level(n_hi + 1);
        for (auto& [a, p] : win)
            if (p <= n_hi) by_level[p].push_back(a);

        auto& seqs = fam.sequences[tau];
        for (Int n = 0; n <= n_hi; ++n) {
            std::vector<Int> free_elts = by_level[n];  // sorted increasing
            // Sequences whose continuation is forced take their +h element.
            std::vector<size_t> waiting;
            for (size_t l = 0; l < seqs.size(); ++l) {
                Int y = seqs[l].back();
                if (ext.phi_at({tau, y}) != n - 1) continue;  // already stopped growing
                if (ext.phi_at({tau, y + h}) == n) {
                    seqs[l].push_back(y + h);
                    free_elts.erase(std::find(free_elts.begin(), free_elts.end(), y + h));
                } else {
                    waiting.push_back(l);
                }
            }
            // Remaining sequences need some a > y + h; matching the largest
            // threshold first with the smallest feasible element succeeds
            // whenever any matching does.
            std::sort(waiting.begin(), waiting.end(),
                      [&](size_t i, size_t j) { return seqs[i].back() > seqs[j].back(); });
            for (size_t l : waiting) {
                Int bound = seqs[l].back() + h;
                auto it = std::find_if(free_elts.begin(), free_elts.end(),
                                       [&](Int a) { return a > bound; });
                if (it == free_elts.end())
                    throw std::logic_error("adapted_family: no continuation, axiom (d) violated");
                seqs[l].push_back(*it);
                free_elts.erase(it);
            }
            for (Int a : free_elts) seqs.push_back({a});  // new sequences
        }
        if (seqs.size() != static_cast<size_t>(h))
            throw std::logic_error("adapted_family: expected exactly h sequences");
    }
    return fam;
}

}  // namespace adlv
