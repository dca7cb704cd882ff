#ifndef QDIFF_BLOCKS_HPP
#define QDIFF_BLOCKS_HPP

#include "qdiff/whittaker.hpp"

namespace qdiff {

struct IdentityRow {
    Rat exponent;
    Scalar lhs, rhs;
    bool pass = false;
};

struct IdentityReport {
    long n = 0;
    Rat order;
    std::vector<IdentityRow> rows;
    std::vector<LatticePoint> lattice;
    bool pass = false;
};

// Left side of the normalized identity:
// (q^{1/n} z^{1/n}; q^{1/n}, q^{1/n})_inf through z^{order_top}.
ZSeries lhs_series(long n, const Rat& order_top, const Tower& tower);

// Right side: sum over the lattice of z^{norm(l)} R(l) <W, W>-series with
// parameters q^{alpha/n + l_alpha}.
ZSeries rhs_series(long n, const Rat& order_top, const Tower& tower,
                   std::vector<LatticePoint>* lattice_used = nullptr);

IdentityReport verify_identity(long n, const Rat& order_top, const Tower& tower);

// Normalized conformal block: z^{sum gamma_i^2 / 2} <W(1|q/u_n..), W(z|u..)>
// through tensor degree D; the u_i must be explicit q-powers. The
// transcendental one-loop constant is intentionally not multiplied in.
ZSeries z_function(const std::vector<Scalar>& u, long D, const Tower& tower);

// Tower for a given n: t = q^{1/(2n)}, plain rational coefficients.
Tower identity_tower(long n);

} // namespace qdiff

#endif
