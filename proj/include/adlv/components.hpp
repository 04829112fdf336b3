#pragma once

#include "adlv/enumerate.hpp"

namespace adlv {

// mu-tilde of a cyclic chart: per component tau, sort the successor pairs
// (b_{tau,i}, mu'_{tau+1,i}) by b and read the mu entries off as row tau+1.
// Satisfies d*nu <= orbit_sum(mu_tilde) <= orbit_sum(mu) in dominance order.
GCocharacter tilde_mu(const ExtendedELChart& ext);

// |V| of a cyclic chart split as S1 + S2: S1 the same-generator-order part
// (equal to <mu_tilde, mu>_G), S2 the wrap-around part.
struct S1S2 {
    Int s1 = 0;
    Int s2 = 0;
};
S1S2 s1_s2_decomposition(const ExtendedELChart& ext);

// The interpolating chain psi-hat^1, ..., psi-hat^h between orbit_sum(mu_tilde)
// and d*nu, built from the partial sorts suc_i of the successor map.
struct PsiChainReport {
    std::vector<RelCocharacter> psi_hat;  // psi_hat[i-1] = psi-hat^i
    bool monotone = true;                 // psi-hat^i <= psi-hat^{i-1}
    bool endpoints_ok = true;
    std::string orientation;  // which endpoint carries orbit_sum(mu_tilde)
    std::vector<Int> step_bounds;
    std::vector<Int> step_lattice_counts;
    bool step_bounds_hold = true;
    Int total_lattice = 0;
};
PsiChainReport psi_chain(const ExtendedELChart& ext);

// |M_mu|: number of charts of maximal |V|.
Int component_count(const GCocharacter& mu, const SuperbasicDatum& datum);

// The two component-count lemmas: (1) two non-constant rows force at least
// two top charts, exhibited by cyclic witnesses; (2) with a single
// non-constant row the counts agree with the d = 1 enumeration for that row.
struct Lemma7Report {
    int part = 0;
    bool pass = false;
    // part 1
    Int top_count = 0;
    std::vector<GCocharacter> witness_types;  // distinct cyclic top witnesses
    // part 2
    Int count_d = 0;       // |M_mu| for the full datum
    Int count_d1 = 0;      // |M| for the d = 1 row instance
    bool dims_match = false;  // full |V| multisets agree
};
Lemma7Report lemma7_checks(const GCocharacter& mu, const SuperbasicDatum& datum);

// Report for the minuscule bijection conjecture; emission only, no equality
// is asserted.
struct ConjectureReport {
    GCocharacter mu;
    Int chart_count = 0;
    Int orbit_count = 0;     // |{mu~ in W.mu : d nu <= orbit_sum(mu~)}|
    Int top_count = 0;       // |M_mu|
    Int predicted_top = 0;   // |{mu~ in W.mu : orbit_sum = floor/ceil vector}|
    std::vector<GCocharacter> tilde_images;  // parallel to the enumeration
    bool sandwich_all = true;
    bool tilde_injective = true;
    bool tilde_into_orbit_set = true;
    bool bijection_matches = false;  // chart_count == orbit_count && injective
    bool top_matches = false;        // top_count == predicted_top
};
ConjectureReport conjecture_report(const GCocharacter& mu, const SuperbasicDatum& datum);

}  // namespace adlv
