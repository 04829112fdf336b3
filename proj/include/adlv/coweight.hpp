#pragma once

#include "adlv/rational.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace adlv {

// Element a_(tau) of Z^(d), the disjoint union of d copies of Z indexed by
// the Galois group I = Z/dZ. The partial order compares values only within
// the same component; adding an integer acts on the value.
struct IndexedInt {
    int tau = 0;
    Int value = 0;

    friend bool operator==(const IndexedInt&, const IndexedInt&) = default;
};

inline IndexedInt operator+(IndexedInt a, Int n) { return {a.tau, a.value + n}; }
inline IndexedInt operator-(IndexedInt a, Int n) { return {a.tau, a.value - n}; }

// The partial order on Z^(d): defined only inside one component.
inline bool comparable(const IndexedInt& a, const IndexedInt& c) { return a.tau == c.tau; }
inline bool leq(const IndexedInt& a, const IndexedInt& c) {
    return a.tau == c.tau && a.value <= c.value;
}
inline bool lt(const IndexedInt& a, const IndexedInt& c) {
    return a.tau == c.tau && a.value < c.value;
}

// Relative (rational) cocharacter, an element of Q^h.
using RelCocharacter = std::vector<Rat>;

RelCocharacter to_rel(const std::vector<Int>& v);
RelCocharacter scale(const RelCocharacter& v, Int k);
RelCocharacter operator-(const RelCocharacter& v);
RelCocharacter operator-(const RelCocharacter& a, const RelCocharacter& b);
bool is_integral(const RelCocharacter& v);

// Absolute cocharacter in X_*(T) = prod_{tau in I} Z^h: d rows of h integers,
// row tau listing the exponents of the tau-th GL_h factor. Dominant means
// every row is weakly increasing (lower-triangular Borel convention; all
// dominance in this library is oriented that way).
struct GCocharacter {
    int d = 0;
    int h = 0;
    std::vector<std::vector<Int>> rows;

    GCocharacter() = default;
    GCocharacter(int d_, int h_) : d(d_), h(h_), rows(d_, std::vector<Int>(h_, 0)) {}
    GCocharacter(int d_, int h_, std::vector<std::vector<Int>> rows_);

    Int total() const;
    std::vector<Int> row_sums() const;
    bool is_dominant() const;
    bool is_nonnegative() const;

    friend bool operator==(const GCocharacter&, const GCocharacter&) = default;
    // Lexicographic; used only to fix canonical orderings of enumerations.
    friend std::strong_ordering operator<=>(const GCocharacter&, const GCocharacter&);
};

// The superbasic datum (d, h, (m_tau)): fixes the Frobenius-twisted shift
// f(a_(tau)) = (a + m_{tau+1})_(tau+1) and the Newton slope m/(dh).
// Requires gcd(m, h) = 1.
struct SuperbasicDatum {
    int d = 0;
    int h = 0;
    std::vector<Int> slopes;  // (m_tau), size d
    Int m = 0;                // sum of slopes

    SuperbasicDatum() = default;
    SuperbasicDatum(int d_, int h_, std::vector<Int> slopes_);

    friend bool operator==(const SuperbasicDatum&, const SuperbasicDatum&) = default;
};

// Datum with the paper's normalization m_tau = sum of row tau of mu.
SuperbasicDatum datum_from_mu(const GCocharacter& mu);

// Sum of all Galois translates: the column sums (over tau) of mu, landing in
// the relative coweight lattice. Integer and rational variants.
std::vector<Int> column_sums(const GCocharacter& mu);
RelCocharacter orbit_sum(const GCocharacter& mu);

// Weakly increasing rearrangement.
RelCocharacter dominant_sort(const RelCocharacter& v);
std::vector<Int> dominant_sort(const std::vector<Int>& v);

// v1 is less than or equal to v2 in the dominance order: all proper partial
// sums of v1 are >= those of v2 and the totals agree. (With increasing
// dominance the smaller element has the higher polygon.)
bool dominance_leq(const RelCocharacter& v1, const RelCocharacter& v2);
bool dominance_leq(const std::vector<Int>& v1, const std::vector<Int>& v2);

// Rowwise dominance over all Galois components.
bool g_dominance_leq(const GCocharacter& mu1, const GCocharacter& mu2);

// Orbit of mu under the absolute Weyl group (S_h)^I: all distinct tuples of
// row rearrangements, in lexicographic order.
std::vector<GCocharacter> weyl_orbit(const GCocharacter& mu);

// Each row takes at most two consecutive values.
bool is_minuscule(const GCocharacter& mu);

// The constant vector (m/(dh), ..., m/(dh)).
RelCocharacter newton_point(const SuperbasicDatum& datum);

// Kottwitz-point test: total entry sum of mu equals m.
bool kappa_match(const GCocharacter& mu, const SuperbasicDatum& datum);

// All integer vectors whose dominant sort is dominance-below the dominant
// vector `row` (the building block for type and Sigma(mu) enumerations).
// Entries necessarily lie in [min row, max row].
std::vector<std::vector<Int>> rows_dominated_by(const std::vector<Int>& row);

}  // namespace adlv
