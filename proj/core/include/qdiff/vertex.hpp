#ifndef QDIFF_VERTEX_HPP
#define QDIFF_VERTEX_HPP

#include "qdiff/zseries.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qdiff {

// Mode support of a Heisenberg color: all k, only multiples of m, or only
// non-multiples of m.
struct ModeFilter {
    long modulus = 1;
    bool multiples_only = false;
    bool complement = false; // k not divisible by modulus

    bool allows(long k) const {
        long a = k % modulus;
        if (a < 0) a += modulus;
        if (complement) return a != 0;
        if (multiples_only || modulus > 1) return a == 0;
        return true;
    }
};

inline ModeFilter all_modes() { return {1, false, false}; }
inline ModeFilter multiples_of(long m) { return {m, true, false}; }
inline ModeFilter non_multiples_of(long m) { return {m, false, true}; }

// One Heisenberg color: [a_k, a_-k] = k * scale on the supported modes;
// a[-k] raises the grading by k * mode_degree; mode k couples to z^{-k zstep}.
struct BosonColor {
    Rat scale = Rat(1);
    ModeFilter filter;
    Rat mode_degree = Rat(1);
    Rat zstep = Rat(1);
};

struct BosonAlgebra {
    std::vector<BosonColor> colors;
    long lattice_rank = 0;
    std::function<Rat(const std::vector<long>&)> lattice_degree; // may be null if rank 0

    long color_count() const { return static_cast<long>(colors.size()); }
};

// Basis state: creation-mode multiset plus a lattice weight.
struct BosonState {
    std::map<std::pair<long, long>, long> modes; // (color, k>0) -> multiplicity
    std::vector<long> weight;

    auto operator<=>(const BosonState&) const = default;
    std::string str() const;
};

Rat state_degree(const BosonState& s, const BosonAlgebra& alg);
std::vector<BosonState> boson_states_up_to(const BosonAlgebra& alg, const Rat& max_degree,
                                           const std::vector<std::vector<long>>& weights);

class BosonVector {
public:
    using Terms = std::map<BosonState, Scalar>;

    BosonVector() = default;
    static BosonVector basis(const BosonState& s, const Scalar& c = Scalar(1L));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const BosonState& s) const;

    void add_term(const BosonState& s, const Scalar& c);
    void add_scaled(const BosonVector& v, const Scalar& c);
    BosonVector scaled(const Scalar& c) const;
    friend BosonVector operator+(const BosonVector& a, const BosonVector& b);
    friend BosonVector operator-(const BosonVector& a, const BosonVector& b);
    bool operator==(const BosonVector& b) const { return terms_ == b.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

// Exponent entry: contributes sum_{k != 0 allowed} (w/k) rho^k a_color[k]
// z^{-k zstep} to the exponent of a normal-ordered exponential. The entry
// filter intersects the color's own mode support (used by dressings built
// from sparse Heisenberg subalgebras).
struct ProfileEntry {
    long color;
    Rat weight;
    Scalar ratio;
    ModeFilter filter = all_modes();
};

// Zero-mode data: e^{shift . Q} followed by prod_b (c_b z^{e_b})^{a_b[0]}
// (the power part acts first). Empty shift/base means no lattice content.
struct ZeroMode {
    std::vector<long> shift;
    std::vector<Scalar> base_coeff;
    std::vector<Rat> base_zexp;

    bool trivial() const { return shift.empty(); }
};

// coeff * z^{z_power} * exp(creation part) exp(annihilation part) * zero modes
struct VertexOperator {
    Scalar coeff = Scalar(1L);
    Rat z_power = Rat(0);
    std::vector<ProfileEntry> creation;
    std::vector<ProfileEntry> annihilation;
    ZeroMode zm;

    VertexOperator scaled(const Scalar& c) const {
        VertexOperator v = *this;
        v.coeff *= c;
        return v;
    }
};

using CurrentSum = std::vector<VertexOperator>;

// Application of V(z) to a vector: returns the finite family of z-exponents
// with their images, truncated to states of degree <= cap. When target is
// given, only the z-exponent *target is produced (prunes the creation side).
std::map<Rat, BosonVector> apply_vertex(const VertexOperator& v, const BosonVector& in,
                                        const BosonAlgebra& alg, const Rat& cap,
                                        const Rat* target = nullptr);

// Mode V[r] (coefficient of z^{-r}).
BosonVector apply_mode(const CurrentSum& cs, const Rat& r, const BosonVector& in,
                       const BosonAlgebra& alg, const Rat& cap);

// Same, but asserts that every surviving exponent is congruent to an integer
// mode (used by the root-of-unity-summed constructions).
BosonVector apply_mode_checked(const CurrentSum& cs, const Rat& r, const BosonVector& in,
                               const BosonAlgebra& alg, const Rat& cap,
                               const std::vector<Rat>& allowed_mode_residues);

// Regular product A(z) B(az). Declared pole ratios are the allowed values of
// w/z where contraction factors may be singular; the evaluation point a must
// avoid them, and undeclared singular factors raise errors.
CurrentSum regular_product(const CurrentSum& A, const CurrentSum& B, const Scalar& a,
                           const std::vector<Scalar>& declared_pole_ratios,
                           const BosonAlgebra& alg);

// A(z) B(w) with the contraction kept as a truncated series in x = w/z:
// returns pairs (series in x, combined operator with B's entries re-based to
// the common argument z ... w-dependence retained separately). Used by the
// two-variable oracle in tests via matrix elements instead; the production
// path only needs coincident-point products.

// Normal-ordered product at coincident argument: no contraction factors.
VertexOperator normal_ordered_product(const VertexOperator& A, const VertexOperator& B,
                                      const Scalar& a, const BosonAlgebra& alg);

// Plain Heisenberg mode actions (used for H-type currents).
BosonVector apply_creator(long color, long k, const BosonVector& v, const BosonAlgebra& alg,
                          const Rat& cap);
BosonVector apply_annihilator(long color, long k, const BosonVector& v, const BosonAlgebra& alg);

std::string vertex_str(const VertexOperator& v);

} // namespace qdiff

#endif
