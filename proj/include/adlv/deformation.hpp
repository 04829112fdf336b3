#pragma once

#include "adlv/extended.hpp"

namespace adlv {

// Canonical deformation of (A, phi): the box-indexed family phi_i between the
// cyclic phi_0 (index 0) and phi (index n_vec). Component tau's jump points
// { a : phi(a+h) > phi(a)+1 } are frozen at construction, listed decreasing.
struct DeformationFrame {
    ExtendedELChart base;
    std::vector<std::vector<Int>> x_lists;  // per tau, decreasing
    std::vector<int> n_vec;
};

DeformationFrame deformation_frame(const ExtendedELChart& ext);

// phi_i: equals the base phi at and above the active jump point x_{tau,i_tau},
// and below it climbs the h-ladder to the first element >= x_{tau,i_tau},
// taking the base value there minus the number of steps (for i_tau = 0, the
// cyclic phi_0). Index 0 gives cyclic_phi, index n_vec gives the base.
ExtendedELChart phi_index(const DeformationFrame& frame, const std::vector<int>& i_vec);

// Bookkeeping for one unit step i -> i + e_sigma, activating the jump at
// x = x_{sigma, i_sigma + 1} with alpha = phi(x+h) - phi(x) - 1 (base phi)
// and n = height(x).
struct StepDelta {
    Int alpha = 0;
    Int n = 0;
    Int delta = 0;  // the transfer-corollary value Delta
    std::vector<std::pair<IndexedInt, IndexedInt>> d1, d2, d3;
    Int v_diff = 0;  // |V(phi')| - |V(phi)|
    Int s1 = 0, s2 = 0, s3 = 0, c3 = 0;
    bool d_sets_match = false;      // V' \ V == D1 ∪ D3 and V \ V' == D2
    bool s_counts_match = false;    // |D1| = S1, |D2| = S2, |D3| = S3
    bool c3_bound_holds = false;    // |C3| >= S3 + min(alpha, n+1)
    bool delta_bound_holds = false; // v_diff <= delta
};

// A step in a component with no jump remaining (i_sigma = n_sigma) is a
// no-op and returns the zero record; i_sigma > n_sigma is rejected.
StepDelta step_delta(const DeformationFrame& frame, const std::vector<int>& i_vec, int sigma);

// Walks the canonical unit-step path 0 -> n_vec (component 0 first) checking
// that every phi_i validates and that Hodge points strictly increase in the
// dominance order at every step.
struct HodgeChainReport {
    bool all_valid = true;
    bool strict_increase = true;
    bool endpoints_ok = true;
    std::vector<GCocharacter> hodge_points;  // along the path
};

HodgeChainReport hodge_chain_check(const DeformationFrame& frame);

}  // namespace adlv
