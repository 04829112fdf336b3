#include "adlv/enumerate.hpp"

#include "adlv/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace adlv {

int worker_count() {
    if (const char* env = std::getenv("ADLV_JOBS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    size_t jobs = std::min<size_t>(worker_count(), n);
    if (jobs <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (size_t w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < n; i += jobs) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<GCocharacter> candidate_types(const GCocharacter& mu, const SuperbasicDatum& datum) {
    if (mu.d != datum.d || mu.h != datum.h)
        throw std::invalid_argument("candidate_types: shape mismatch");
    if (!mu.is_dominant()) throw std::invalid_argument("candidate_types: mu must be dominant");
    if (!mu.is_nonnegative()) throw std::invalid_argument("candidate_types: mu must be >= 0");
    if (!kappa_match(mu, datum))
        throw KappaMismatchError("candidate_types: Kottwitz points differ");

    std::vector<std::vector<std::vector<Int>>> per_row(mu.d);
    for (int tau = 0; tau < mu.d; ++tau) per_row[tau] = rows_dominated_by(mu.rows[tau]);

    std::vector<GCocharacter> types;
    GCocharacter cur(mu.d, mu.h);
    auto rec = [&](auto&& self, int tau) -> void {
        if (tau == mu.d) {
            if (is_valid_type(cur, datum)) types.push_back(cur);
            return;
        }
        for (const auto& row : per_row[tau]) {
            cur.rows[tau] = row;
            self(self, tau + 1);
        }
    };
    rec(rec, 0);
    std::sort(types.begin(), types.end());
    return types;
}

std::vector<ExtendedELChart> phi_extensions(const ELChart& chart, const GCocharacter& mu) {
    const int d = chart.d(), h = chart.h();

    // Assignment slots: A_low across components, in increasing value order
    // (components interleaved), so phi(a-h) is always assigned before phi(a).
    std::vector<IndexedInt> slots;
    std::vector<std::map<Int, Int>> tables(d);
    for (int tau = 0; tau < d; ++tau)
        for (Int a : chart.low_values(tau)) slots.push_back({tau, a});
    std::sort(slots.begin(), slots.end(), [](const IndexedInt& x, const IndexedInt& y) {
        return x.value != y.value ? x.value < y.value : x.tau < y.tau;
    });

    std::vector<ExtendedELChart> found;
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == slots.size()) {
            ExtendedELChart ext(chart, tables);
            if (validate(ext).empty() && hodge_point(ext) == mu) found.push_back(std::move(ext));
            return;
        }
        IndexedInt a = slots[pos];
        Int lo = 0;
        if (chart.contains(a - h)) lo = tables[a.tau].at(a.value - h) + 1;
        Int hi = chart.height(f_step(a, chart.datum()));
        if (a.value + h >= chart.forced_threshold(a.tau)) {
            Int forced_above = chart.height(f_step(a + h, chart.datum()));
            hi = std::min(hi, forced_above - 1);
        }
        for (Int v = lo; v <= hi; ++v) {
            tables[a.tau][a.value] = v;
            self(self, pos + 1);
        }
        tables[a.tau].erase(a.value);
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end(), [](const ExtendedELChart& x, const ExtendedELChart& y) {
        return x.phi_low() < y.phi_low();
    });
    return found;
}

EnumerationResult enumerate_charts(const GCocharacter& mu, const SuperbasicDatum& datum) {
    auto types = candidate_types(mu, datum);
    std::vector<std::vector<ExtendedELChart>> buckets(types.size());
    parallel_for(types.size(), [&](size_t i) {
        buckets[i] = phi_extensions(chart_from_type(types[i], datum), mu);
    });
    EnumerationResult result{mu, datum, {}, {}, -1};
    for (auto& bucket : buckets)
        for (auto& ext : bucket) {
            result.dims.push_back(v_dim(ext));
            result.max_dim = std::max(result.max_dim, result.dims.back());
            result.charts.push_back(std::move(ext));
        }
    return result;
}

Int dimension(const GCocharacter& mu, const SuperbasicDatum& datum) {
    auto result = enumerate_charts(mu, datum);
    if (result.charts.empty())
        throw std::logic_error(
            "dimension: enumeration came back empty despite matching Kottwitz points");
    return result.max_dim;
}

std::vector<ExtendedELChart> top_charts(const GCocharacter& mu, const SuperbasicDatum& datum) {
    auto result = enumerate_charts(mu, datum);
    std::vector<ExtendedELChart> top;
    for (size_t i = 0; i < result.charts.size(); ++i)
        if (result.dims[i] == result.max_dim) top.push_back(result.charts[i]);
    return top;
}

}  // namespace adlv
