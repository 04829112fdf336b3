#pragma once

#include "adlv/extended.hpp"
#include "adlv/polygon.hpp"

#include <functional>

namespace adlv {

// Exhaustive enumeration of the extended EL-charts for a dominant mu >= 0.
// Charts are listed in canonical order: types lexicographically, then phi
// tables lexicographically; re-runs produce identical output.
struct EnumerationResult {
    GCocharacter mu;
    SuperbasicDatum datum;
    std::vector<ExtendedELChart> charts;
    std::vector<Int> dims;  // parallel to charts
    Int max_dim = -1;       // -1 when charts is empty
};

// All types whose charts can carry an extension with Hodge point mu: rows
// dominated rowwise by the rows of mu, with the orbit-sum partial-sum bound.
std::vector<GCocharacter> candidate_types(const GCocharacter& mu, const SuperbasicDatum& datum);

// All phi tables on A_low making (A, phi) a valid extended EL-chart with
// Hodge point mu, by backtracking in increasing value order.
std::vector<ExtendedELChart> phi_extensions(const ELChart& chart, const GCocharacter& mu);

EnumerationResult enumerate_charts(const GCocharacter& mu, const SuperbasicDatum& datum);

// max |V| over the enumeration; equals the closed formula (the main theorem,
// exercised as an acceptance identity rather than assumed).
Int dimension(const GCocharacter& mu, const SuperbasicDatum& datum);

// The charts attaining the maximum.
std::vector<ExtendedELChart> top_charts(const GCocharacter& mu, const SuperbasicDatum& datum);

// Worker count for the type-parallel search: ADLV_JOBS when set, otherwise
// the available hardware parallelism.
int worker_count();

// Runs fn(i) for i in [0, n) on the worker pool; fn must only write to
// index-i slots of preallocated output.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace adlv
