#include "adlv/deformation.hpp"

#include <algorithm>

namespace adlv {

DeformationFrame deformation_frame(const ExtendedELChart& ext) {
    const ELChart& chart = ext.chart();
    DeformationFrame frame{ext, {}, {}};
    frame.x_lists.resize(chart.d());
    frame.n_vec.resize(chart.d());
    for (int tau = 0; tau < chart.d(); ++tau) {
        // Jump points lie below the forced threshold: beyond it phi steps by
        // exactly 1 along every ladder.
        for (Int a : chart.low_values(tau))
            if (ext.phi_at({tau, a + chart.h()}) > ext.phi_at({tau, a}) + 1)
                frame.x_lists[tau].push_back(a);
        std::sort(frame.x_lists[tau].rbegin(), frame.x_lists[tau].rend());
        frame.n_vec[tau] = static_cast<int>(frame.x_lists[tau].size());
    }
    return frame;
}

ExtendedELChart phi_index(const DeformationFrame& frame, const std::vector<int>& i_vec) {
    const ELChart& chart = frame.base.chart();
    const int d = chart.d(), h = chart.h();
    if (i_vec.size() != static_cast<size_t>(d))
        throw std::invalid_argument("phi_index: index size mismatch");
    for (int tau = 0; tau < d; ++tau)
        if (i_vec[tau] < 0 || i_vec[tau] > frame.n_vec[tau])
            throw std::invalid_argument("phi_index: index outside [0, n]");

    std::vector<std::map<Int, Int>> tables(d);
    for (int tau = 0; tau < d; ++tau) {
        for (Int a : chart.low_values(tau)) {
            Int value;
            if (i_vec[tau] == 0) {
                value = chart.height(f_step({tau, a}, chart.datum()));
            } else {
                Int x = frame.x_lists[tau][i_vec[tau] - 1];
                if (a >= x) {
                    value = frame.base.phi_at({tau, a});
                } else {
                    Int steps = (x - a + h - 1) / h;  // climb to first ladder point >= x
                    value = frame.base.phi_at({tau, a + steps * h}) - steps;
                }
            }
            tables[tau][a] = value;
        }
    }
    return ExtendedELChart(chart, std::move(tables));
}

namespace {

std::vector<std::pair<IndexedInt, IndexedInt>> sorted_pairs(
    std::vector<std::pair<IndexedInt, IndexedInt>> v) {
    auto key = [](const std::pair<IndexedInt, IndexedInt>& p) {
        return std::tuple(p.first.tau, p.first.value, p.second.tau, p.second.value);
    };
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return v;
}

std::vector<std::pair<IndexedInt, IndexedInt>> set_difference_pairs(
    const std::vector<std::pair<IndexedInt, IndexedInt>>& a,
    const std::vector<std::pair<IndexedInt, IndexedInt>>& b) {
    std::vector<std::pair<IndexedInt, IndexedInt>> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        [](const auto& x, const auto& y) {
                            return std::tuple(x.first.tau, x.first.value, x.second.tau,
                                              x.second.value) <
                                   std::tuple(y.first.tau, y.first.value, y.second.tau,
                                              y.second.value);
                        });
    return out;
}

}  // namespace

StepDelta step_delta(const DeformationFrame& frame, const std::vector<int>& i_vec, int sigma) {
    const ELChart& chart = frame.base.chart();
    const int d = chart.d(), h = chart.h();
    if (sigma < 0 || sigma >= d) throw std::invalid_argument("step_delta: bad component");
    if (i_vec.size() != static_cast<size_t>(d) || i_vec[sigma] > frame.n_vec[sigma])
        throw std::invalid_argument("step_delta: index out of range");
    StepDelta out;
    if (i_vec[sigma] == frame.n_vec[sigma]) {
        // No jump left to activate in this component.
        out.d_sets_match = out.s_counts_match = out.c3_bound_holds = out.delta_bound_holds = true;
        return out;
    }

    Int x = frame.x_lists[sigma][i_vec[sigma]];
    out.alpha = frame.base.phi_at({sigma, x + h}) - frame.base.phi_at({sigma, x}) - 1;
    out.n = chart.height({sigma, x});

    auto next = i_vec;
    ++next[sigma];
    ExtendedELChart lo = phi_index(frame, i_vec);
    ExtendedELChart hi = phi_index(frame, next);

    auto v_lo = sorted_pairs(v_set(lo));
    auto v_hi = sorted_pairs(v_set(hi));
    out.v_diff = static_cast<Int>(v_hi.size()) - static_cast<Int>(v_lo.size());

    Int phi_x = lo.phi_at({sigma, x});

    auto scan_limit = [&](Int phi_cap) { return chart.max_gen(sigma) + h * std::max<Int>(phi_cap, 0); };

    // D1: pairs headed by x + h that appear.
    {
        IndexedInt head{sigma, x + h};
        Int top = hi.phi_at(head);
        Int bottom = hi.phi_at({sigma, x});
        for (Int c = x + h + 1; c <= scan_limit(top); ++c)
            if (chart.contains({sigma, c})) {
                Int pc = hi.phi_at({sigma, c});
                if (pc < top && pc > bottom) out.d1.push_back({head, {sigma, c}});
            }
    }
    // D2: pairs headed by x - nh that disappear.
    {
        IndexedInt head{sigma, x - out.n * h};
        Int p_lo = lo.phi_at(head);
        Int p_hi = hi.phi_at(head);
        for (Int c = head.value + 1; c <= scan_limit(p_lo); ++c)
            if (chart.contains({sigma, c})) {
                Int pc_lo = lo.phi_at({sigma, c});
                Int pc_hi = hi.phi_at({sigma, c});
                if (p_lo > pc_lo && p_hi <= pc_hi) out.d2.push_back({head, {sigma, c}});
            }
    }
    // D3: generator-headed pairs pointing into the ladder of x that appear.
    {
        for (Int b : chart.gens(sigma))
            for (Int delta = 0; delta <= out.n; ++delta) {
                Int tail = x - delta * h;
                if (b == x - out.n * h || b >= tail) continue;
                if (hi.phi_at({sigma, b}) > hi.phi_at({sigma, tail}) &&
                    lo.phi_at({sigma, b}) <= lo.phi_at({sigma, tail}))
                    out.d3.push_back({{sigma, b}, {sigma, tail}});
            }
    }

    // Transfer-corollary value.
    {
        auto mu_i = hodge_point(lo).rows[sigma];
        Int count = 0;
        for (Int k = 0; k <= out.alpha - 1; ++k)
            for (Int l = 0; l <= out.n; ++l)
                count += std::count(mu_i.begin(), mu_i.end(), phi_x - k - l);
        out.delta = count - std::min<Int>(out.alpha, out.n + 1);
    }

    // Window-count forms of the same bookkeeping.
    auto count_range = [&](Int above, Int lo_phi, Int hi_phi) {
        Int count = 0;
        for (Int a = above + 1; a <= scan_limit(hi_phi); ++a)
            if (chart.contains({sigma, a})) {
                Int p = lo.phi_at({sigma, a});
                if (p >= lo_phi && p <= hi_phi) ++count;
            }
        return count;
    };
    out.s1 = count_range(x + h, phi_x - out.alpha + 1, phi_x);
    out.s2 = count_range(x - out.n * h, phi_x - out.alpha - out.n, phi_x - out.n - 1);
    out.s3 = 0;
    for (Int b : chart.gens(sigma))
        for (Int delta = 0; delta <= out.n; ++delta) {
            if (b == x - out.n * h || b >= x - delta * h) continue;
            Int p = lo.phi_at({sigma, b});
            if (p >= phi_x - delta - out.alpha + 1 && p <= phi_x - delta) ++out.s3;
        }
    out.c3 = 0;
    for (Int b : chart.gens(sigma))
        for (Int delta = 0; delta <= out.n; ++delta) {
            if (b > x + h - delta * h) continue;
            Int p = lo.phi_at({sigma, b});
            if (p >= phi_x - delta - out.alpha + 1 && p <= phi_x - delta) ++out.c3;
        }

    auto gained = set_difference_pairs(v_hi, v_lo);
    auto lost = set_difference_pairs(v_lo, v_hi);
    auto d13 = sorted_pairs([&] {
        auto v = out.d1;
        v.insert(v.end(), out.d3.begin(), out.d3.end());
        return v;
    }());
    out.d_sets_match = gained == d13 && lost == sorted_pairs(out.d2);
    out.s_counts_match = out.s1 == static_cast<Int>(out.d1.size()) &&
                         out.s2 == static_cast<Int>(out.d2.size()) &&
                         out.s3 == static_cast<Int>(out.d3.size());
    out.c3_bound_holds = out.c3 >= out.s3 + std::min<Int>(out.alpha, out.n + 1);
    out.delta_bound_holds = out.v_diff <= out.delta;
    return out;
}

HodgeChainReport hodge_chain_check(const DeformationFrame& frame) {
    const int d = frame.base.chart().d();
    HodgeChainReport report;
    std::vector<int> i_vec(d, 0);
    ExtendedELChart cur = phi_index(frame, i_vec);
    report.all_valid = validate(cur).empty();
    report.hodge_points.push_back(hodge_point(cur));
    for (int sigma = 0; sigma < d; ++sigma)
        for (int step = 0; step < frame.n_vec[sigma]; ++step) {
            ++i_vec[sigma];
            ExtendedELChart nxt = phi_index(frame, i_vec);
            if (!validate(nxt).empty()) report.all_valid = false;
            GCocharacter prev = report.hodge_points.back();
            GCocharacter now = hodge_point(nxt);
            if (!(g_dominance_leq(prev, now) && !(prev == now))) report.strict_increase = false;
            report.hodge_points.push_back(std::move(now));
        }
    auto type = type_of(frame.base.chart()).type;
    GCocharacter type_dom(type.d, type.h);
    for (int tau = 0; tau < type.d; ++tau) type_dom.rows[tau] = dominant_sort(type.rows[tau]);
    report.endpoints_ok = report.hodge_points.front() == type_dom &&
                          report.hodge_points.back() == hodge_point(frame.base);
    return report;
}

}  // namespace adlv
