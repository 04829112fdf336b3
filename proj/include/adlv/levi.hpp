#pragma once

#include "adlv/enumerate.hpp"
#include "adlv/polygon.hpp"

namespace adlv {

// A general (not necessarily superbasic) sigma-conjugacy class of
// Res_{k'/k} GL_h: dominant rational Newton point plus its total valuation.
// Block sums of d*nu at isoclinic boundaries must be integral.
struct GeneralClassDatum {
    int d = 0;
    int h = 0;
    RelCocharacter newton;
    Int kappa = 0;

    GeneralClassDatum(int d_, int h_, RelCocharacter newton_);
};

// One superbasic factor of the centralizer Levi: columns [start, start+height)
// carry constant slope with valuation v = d * slope * height, gcd(v, height)=1.
struct LeviBlock {
    int start = 0;
    int height = 0;
    Rat slope;
    Int v = 0;
};

struct LeviPartition {
    std::vector<LeviBlock> blocks;
};

// Isoclinic blocks of the Newton point, each split into its minimal
// superbasic pieces: a slope-s block of height H with valuation w = d s H
// splits into gcd(|w|, H) pieces (H pieces of height 1 when the slope is
// integral).
LeviPartition newton_levi(const GeneralClassDatum& datum);

// Non-emptiness: matching Kottwitz points and d*nu dominance-below the orbit
// sum of mu.
bool mazur_nonempty(const GCocharacter& mu, const GeneralClassDatum& datum);

// Closed formula <rho, mu - nu> - (1/2) defect for the general class.
Int general_dim(const GCocharacter& mu, const GeneralClassDatum& datum);

// Sigma(mu) = { mu' : mu'_dom rowwise dominance-below mu }, its M-dominant
// part (rows weakly increasing within every block), and the maximal elements
// of the latter under the M-dominance order <=_M.
std::vector<GCocharacter> sigma_mu_set(const GCocharacter& mu);
std::vector<GCocharacter> sigma_m_dom(const GCocharacter& mu, const LeviPartition& partition);
std::vector<GCocharacter> sigma_m_max(const GCocharacter& mu, const LeviPartition& partition);

// mu2 <=_M mu1: rowwise, mu1 - mu2 has zero block sums and non-positive
// partial sums within every block.
bool m_dominance_leq(const GCocharacter& mu2, const GCocharacter& mu1,
                     const LeviPartition& partition);

// <rho_M, x> with blockwise weight vectors.
Rat rho_m_pairing(const GCocharacter& x, const LeviPartition& partition);
Rat rho_m_pairing_embedded(const RelCocharacter& nu, int d, const LeviPartition& partition);

// d(mu, mu_M) = <rho, mu + mu_M> - 2 <rho_M, mu_M>; only the equality regime
// (mu_M maximal in Sigma(mu)_{M-dom}) is exposed.
Int d_value(const GCocharacter& mu, const GCocharacter& mu_M, const LeviPartition& partition);

// Dimension of the Levi-side variety: sum over superbasic blocks of the
// closed formula.
Int levi_dim(const GCocharacter& mu_M, const GeneralClassDatum& datum,
             const LeviPartition& partition);

// The dimension recursion: sup over the kappa_M-fiber of the M-maximal set of
// [levi_dim + d_value], plus <rho, nu - nu_dom> - <2 rho_N, nu>, compared
// against the closed formula.
struct RecursionReport {
    Int lhs = 0;  // general_dim
    Int rhs = 0;
    bool equal = false;
    Int sup_term = 0;
    Rat correction;  // <rho, nu - nu_dom> - <2 rho_N, nu>
    std::vector<GCocharacter> fiber;  // M-max elements with matching kappa_M
};

RecursionReport recursion_check(const GCocharacter& mu, const GeneralClassDatum& datum);

}  // namespace adlv
