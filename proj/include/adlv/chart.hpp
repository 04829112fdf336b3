#pragma once

#include "adlv/coweight.hpp"

#include <utility>

namespace adlv {

// The twisted shift f(a_(tau)) = (a + m_{tau+1})_(tau+1).
IndexedInt f_step(const IndexedInt& a, const SuperbasicDatum& datum);

// Normalized EL-chart A of Z^(d), represented by its generator set
// B = A \ (A + h). Within each component B holds exactly h values hitting
// every residue class mod h once, so membership and heights reduce to a
// lookup of the class generator. Charts are immutable once built.
class ELChart {
public:
    ELChart(SuperbasicDatum datum, std::vector<std::vector<Int>> generators);

    const SuperbasicDatum& datum() const { return datum_; }
    int d() const { return datum_.d; }
    int h() const { return datum_.h; }

    // Generators of component tau, sorted increasing.
    const std::vector<Int>& gens(int tau) const { return gens_.at(tau); }
    // Generator of the residue class of `value` in component tau.
    Int class_gen(int tau, Int value) const;

    bool contains(const IndexedInt& a) const;
    // max { n >= 0 : a - n h in A }; rejects a outside A.
    Int height(const IndexedInt& a) const;

    Int min_gen(int tau) const { return gens_[tau].front(); }
    Int max_gen(int tau) const { return gens_[tau].back(); }
    // Above this value every element of Z_(tau) lies in A, which by axiom (c)
    // pins phi there; the finite part of a phi table lives strictly below it.
    Int forced_threshold(int tau) const { return max_gen(tau) - datum_.h + 1; }
    // Elements of A_(tau) below the forced threshold, increasing.
    std::vector<Int> low_values(int tau) const;

    friend bool operator==(const ELChart&, const ELChart&) = default;

private:
    SuperbasicDatum datum_;
    std::vector<std::vector<Int>> gens_;        // per component, sorted
    std::vector<std::vector<Int>> class_gens_;  // per component, indexed by residue mod h
};

// Validates a raw generator family, shifts it by the unique integer making
// the component-0 generators sum to h(h-1)/2, and returns (chart, shift).
std::pair<ELChart, Int> normalize(const SuperbasicDatum& datum,
                                  const std::vector<std::vector<Int>>& raw_generators);

// The successor chain b_0, ..., b_{dh-1} (b_0 = min of component 0) together
// with the type read off the recursion b_{k+1} = f(b_k) - mu'_{k+1} h.
// type.rows uses the I x {1..h} reindexing b_{tau,i} = chain[tau + (i-1)d].
struct TypeVector {
    GCocharacter type;
    std::vector<IndexedInt> chain;  // size d*h

    IndexedInt b(int tau, int i) const { return chain.at(tau + (i - 1) * type.d); }
    IndexedInt suc(int cyclic_index) const {
        return chain.at((cyclic_index + 1) % chain.size());
    }
};

TypeVector type_of(const ELChart& chart);

// Inverse of type_of: the unique normalized chart with the given type.
// Rejects types with negative entries (f-stability fails) or whose orbit sum
// violates the partial-sum bound sum_{i<=k} <mu'>_i <= k m / h.
ELChart chart_from_type(const GCocharacter& mu_prime, const SuperbasicDatum& datum);

// Whether mu_prime satisfies the conditions above (without building).
bool is_valid_type(const GCocharacter& mu_prime, const SuperbasicDatum& datum);

// Chain construction re-anchored at component `anchor`: runs the type
// recursion in the component relabeling tau -> tau + anchor, so the given
// rows describe the chain as seen from that anchor, then renormalizes. The
// canonical type of the result is generally a rotated variant of mu_prime.
ELChart chart_from_type_anchored(const GCocharacter& mu_prime, const SuperbasicDatum& datum,
                                 int anchor);

}  // namespace adlv
