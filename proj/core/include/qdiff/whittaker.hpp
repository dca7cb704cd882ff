#ifndef QDIFF_WHITTAKER_HPP
#define QDIFF_WHITTAKER_HPP

#include "qdiff/fock.hpp"
#include "qdiff/zseries.hpp"

namespace qdiff {

// Whittaker vector in a truncated tensor Fock module: comp[d] is the
// degree-d piece and carries an implicit z^d.
struct WhittakerVector {
    FockConfig cfg;
    std::vector<GradedVector> comp;

    long degree() const { return static_cast<long>(comp.size()) - 1; }
};

// Closed form on one Fock factor: coefficient of |lambda> is
// q^{-qscale c(lambda)/2} / prod_s (q^{qscale h(s)/2} - q^{-qscale h(s)/2}).
WhittakerVector whittaker_single(const Scalar& u, long D, const Tower& tower,
                                 const Rat& qscale = Rat(1));

// Degree-by-degree exact solve of the eigenvector conditions; asserts a
// unique solution at every degree.
WhittakerVector whittaker_solve(const FockConfig& cfg, long D);

// Residuals of the defining conditions; exact, all degrees that fit.
CheckReport whittaker_condition_check(const WhittakerVector& w);

// Conditions for the I_tau-shifted family: eigenvector of E_{-(N-m)k,k} and
// E_{mk,k}, annihilated between; checked on I_{tau}^{N-m} w.
CheckReport whittaker_shifted_check(const WhittakerVector& w, long m);

// sum_d z^d <left_d, right_d>; left is taken at z = 1.
ZSeries pairing_series(const WhittakerVector& left, const WhittakerVector& right, long D);

struct DecompositionComponent {
    LatticePoint l;
    Rat z_norm;                     // z-exponent of the sector prefactor
    Scalar prefactor;               // q-part of the sector prefactor
    std::vector<Scalar> factor_u;   // parameters q^{alpha/n + l_alpha}
    WhittakerVector component;      // prefactor already divided out
};

// Decomposition of the one-factor Whittaker vector of the q^{1/n} tower over
// the lattice sectors; components are expressed in the n-fold tensor basis.
std::vector<DecompositionComponent> whittaker_decompose(long n, long D, const Rat& norm_bound,
                                                        const Tower& tower);

} // namespace qdiff

#endif
