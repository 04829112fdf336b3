#pragma once

#include "adlv/components.hpp"
#include "adlv/deformation.hpp"
#include "adlv/io.hpp"
#include "adlv/levi.hpp"

#include <iosfwd>

namespace adlv::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool hard = true;  // report-only checks never fail a suite
    std::string detail;
};

struct Options {
    bool full = true;  // full acceptance-scale grids vs quick subsets
};

struct GridInstance {
    GCocharacter mu;
    SuperbasicDatum datum;
};

// The superbasic test grid: (d,h) in {(1,2),(1,3),(1,4),(2,2),(2,3),(3,2)},
// dominant mu >= 0 with entries <= 4 (<= 2 when not full) and total coprime
// to h.
std::vector<GridInstance> superbasic_grid(const Options& opt);

// Shared enumeration cache for the grid (several checks walk the same
// instances).
const EnumerationResult& cached_enumeration(const GridInstance& inst);

// Named checks, grouped into suites:
//   metrics, charts, deformation, levi, components, all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

// One check by name (used by the acceptance runner).
CheckResult run_check(const std::string& name, const Options& opt);

// Names of the acceptance criteria, in order.
const std::vector<std::string>& acceptance_checks();

bool all_passed(const std::vector<CheckResult>& results);
void print_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace adlv::verify
