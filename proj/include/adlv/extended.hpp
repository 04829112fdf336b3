#pragma once

#include "adlv/chart.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace adlv {

// Extended EL-chart (A, phi). phi is stored only on the finite set
// A_low = { a in A : a < forced_threshold(tau(a)) }; above the threshold the
// up-set {c >= a} lies in A and axiom (c) forces phi(a) = height(f(a)), so no
// table is needed there. phi is -infinity (nullopt) off A.
class ExtendedELChart {
public:
    ExtendedELChart(ELChart chart, std::vector<std::map<Int, Int>> phi_low);

    const ELChart& chart() const { return chart_; }
    const SuperbasicDatum& datum() const { return chart_.datum(); }
    const std::vector<std::map<Int, Int>>& phi_low() const { return phi_low_; }

    std::optional<Int> phi(const IndexedInt& a) const;
    // phi on a known member of A.
    Int phi_at(const IndexedInt& a) const;

    // Largest phi value on A_low (0 if all tables are empty); validation and
    // scan windows stabilize beyond it.
    Int max_low_phi() const;

    // Elements of A_low in component tau, increasing.
    std::vector<Int> low_values(int tau) const;

    friend bool operator==(const ExtendedELChart&, const ExtendedELChart&) = default;

private:
    ELChart chart_;
    std::vector<std::map<Int, Int>> phi_low_;
};

// The unique cyclic extension: phi0(a) = height(f(a)) everywhere.
ExtendedELChart cyclic_phi(const ELChart& chart);

// Axioms (a)-(d); returns human-readable violations, empty when valid.
// (d) is checked for n up to max_low_phi()+1 and all window positions; both
// counting functions are stable beyond that range.
std::vector<std::string> validate(const ExtendedELChart& ext);

// Dominant cocharacter whose row tau holds value n with multiplicity
// |A_(tau) ∩ phi^{-1}(n)| - |A_(tau) ∩ phi^{-1}(n-1)|.
GCocharacter hodge_point(const ExtendedELChart& ext);

// True iff phi(a) = height(f(a)) for all a (checkable on A_low).
bool is_cyclic(const ExtendedELChart& ext);

// V(A, phi) = { (a, c) : a < c, phi(a) > phi(c) > phi(a-h) }, with a < c the
// partial order of Z^(d) (same component). The scan window is provably
// sufficient: pairs need a <= max generator and phi(c) < phi(a) bounds c.
std::vector<std::pair<IndexedInt, IndexedInt>> v_set(const ExtendedELChart& ext);
Int v_dim(const ExtendedELChart& ext);

// Independent oracle: a blind double loop over the window
// [min gen, max gen + h * margin] per component. Rejects margins below the
// safe bound max_low_phi() + 1.
std::vector<std::pair<IndexedInt, IndexedInt>> v_set_bruteforce(const ExtendedELChart& ext,
                                                                Int margin);

// Partition of each A_(tau) into h sequences along which phi increases by
// exactly 1, stepping by +h exactly when phi(a+h) = phi(a)+1. Returned as
// finite prefixes covering the window where the behavior is not yet forced.
// The phi values of the initial elements realize the Hodge point.
struct AdaptedFamily {
    // sequences[tau][l] = values of the l-th sequence in component tau.
    std::vector<std::vector<std::vector<Int>>> sequences;
};
AdaptedFamily adapted_family(const ExtendedELChart& ext);

}  // namespace adlv
