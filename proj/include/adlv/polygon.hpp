#pragma once

#include "adlv/coweight.hpp"

#include <utility>

namespace adlv {

// Piecewise-linear polygon attached to v in Q^h: starts at (0,0), has slope
// v_i over (i-1, i). Breakpoints are the h+1 vertices.
struct Polygon {
    int h = 0;
    std::vector<Rat> heights;  // heights[x] = value at integer x, size h+1

    explicit Polygon(const RelCocharacter& v);
    const Rat& at(int x) const { return heights.at(x); }
    std::vector<std::pair<int, Rat>> breakpoints() const;
};

// [v] = sum_{i=1}^{h-1} floor(-(v_1 + ... + v_i)). The pairing of v against
// the fundamental weights, floored one partial sum at a time.
Int bracket(const RelCocharacter& v);

// <v1, v2> = [-v1] + [v2].
Int pairing(const RelCocharacter& v1, const RelCocharacter& v2);

// <mu1, mu2>_G = <orbit_sum(mu1), orbit_sum(mu2)>. The overload taking a
// relative first argument treats it as diagonally embedded (orbit sum d*nu).
Int pairing_g(const GCocharacter& mu1, const GCocharacter& mu2);
Int pairing_g(const RelCocharacter& nu, const GCocharacter& mu);
Int pairing_g(const GCocharacter& mu, const RelCocharacter& nu);

// Lattice points (x, y), 1 <= x <= h-1, strictly above the polygon of v2 and
// on or below the polygon of v1. Requires v1 dominance-below v2 and v2
// integral; the count equals pairing(v1, v2). The scan is a direct grid walk,
// independent of the bracket arithmetic, so it doubles as a geometric oracle.
std::vector<std::pair<int, Int>> lattice_points_between_list(const RelCocharacter& v1,
                                                             const RelCocharacter& v2);
Int lattice_points_between(const RelCocharacter& v1, const RelCocharacter& v2);

// <rho, x> with rho realized as the weight vector (i - (h+1)/2)_{i=1..h} in
// every Galois row (half-sum of the positive roots for weakly increasing
// dominance).
Rat rho_pairing(const GCocharacter& x);
Rat rho_pairing_embedded(const RelCocharacter& nu, int d);

// (1/2) defect: sum_{i=1}^{h-1} { -(partial sum of d*nu up to i) }.
// Equals (h-1)/2 for a superbasic datum and 0 for integral Newton points.
Rat half_defect(const RelCocharacter& nu, int d);
Rat half_defect(const SuperbasicDatum& datum);

// Closed dimension formula <rho, mu - nu> - (1/2) defect. Requires the
// Kottwitz points to agree and the result to be a non-negative integer.
Int dim_formula(const GCocharacter& mu, const RelCocharacter& nu, int d);

// <v, dominant_sort(v)> computed as sum_{i<j} max(v_i - v_j, 0).
Int length_to_dom(const std::vector<Int>& v);

// Length of the transfer move on a dominant integral vector: subtract beta at
// slot i, add beta at slot j >= i, re-sort. Evaluates the closed double-sum
// formula; agrees with pairing(v, dominant_sort(transferred)).
Int transfer_length(const std::vector<Int>& v, int i, int j, Int beta);
std::vector<Int> transfer_vector(const std::vector<Int>& v, int i, int j, Int beta);

// Two-element-difference form: the multiset of v' loses {n2, n3} and gains
// {n1, n4}, n1 <= n2 <= n3 <= n4, n1 + n4 = n2 + n3.
Int transfer_corollary(const std::vector<Int>& v_prime, Int n1, Int n2, Int n3, Int n4);

}  // namespace adlv
