#ifndef QDIFF_TWISTED_HPP
#define QDIFF_TWISTED_HPP

#include "qdiff/fermion.hpp"
#include "qdiff/fock.hpp"
#include "qdiff/vertex.hpp"

namespace qdiff {

// Twisted Fock module parameters. The module class depends only on
// (n_tw mod-reduced slope data, n); a full SL(2,Z) matrix reduces to these.
struct TwistParams {
    long n = 2;
    long n_tw = 1;
    Scalar u;     // module parameter; u^{1/n} must be an exact monomial power
    Tower tower;  // L must be a multiple of 2n

    Scalar u_root(long a = 1) const { return u.monomial_pow(Rat(a, n)); }
};

TwistParams twist_from_sigma(long mp, long m, long np, long n, const Scalar& u,
                             const Tower& tower);

// n-boson realization on F^{na} (x) C[Q_(n)] (homogeneous construction).
class BosonRealization {
public:
    using Vec = BosonVector;
    using State = BosonState;

    BosonRealization(TwistParams p, Rat cap);

    Vec e(long r, const Vec& v) const;
    Vec f(long r, const Vec& v) const;
    Vec h(long k, const Vec& v) const;
    long c() const { return p_.n; }
    long cprime() const { return p_.n_tw; }

    std::vector<State> states(const Rat& max_degree) const;
    Vec basis(const State& s) const { return Vec::basis(s); }
    Scalar coeff(const Vec& v, const State& s) const { return v.coeff(s); }
    Rat degree(const State& s) const { return state_degree(s, alg_); }
    const Tower& tower() const { return p_.tower; }
    BosonRealization with_cap(const Rat& cap) const { return BosonRealization(p_, cap); }

    const BosonAlgebra& algebra() const { return alg_; }
    const CurrentSum& e_current() const { return ecur_; }
    const CurrentSum& f_current() const { return fcur_; }
    // the two-term normal-ordered display of the current (diagonal terms use
    // the contracted fermion-bilinear form); exposed for cross-checks
    static CurrentSum displayed_current(const TwistParams& p, int sign);

private:
    TwistParams p_;
    Rat cap_;
    BosonAlgebra alg_;
    CurrentSum ecur_, fcur_;

    mutable std::map<std::pair<long, State>, Vec> ecache_, fcache_, hcache_;
    Vec cached(int which, long r, const Vec& v) const;
    Vec e_basis(long r, const State& s) const;
    Vec f_basis(long r, const State& s) const;
    Vec h_basis(long k, const State& s) const;
};

// Strange (principal) bosonization on a single twisted boson.
class StrangeRealization {
public:
    using Vec = BosonVector;
    using State = BosonState;

    StrangeRealization(TwistParams p, Rat cap);

    Vec e(long r, const Vec& v) const;
    Vec f(long r, const Vec& v) const;
    Vec h(long k, const Vec& v) const;
    long c() const { return p_.n; }
    long cprime() const { return p_.n_tw; }

    std::vector<State> states(const Rat& max_degree) const;
    Vec basis(const State& s) const { return Vec::basis(s); }
    Scalar coeff(const Vec& v, const State& s) const { return v.coeff(s); }
    Rat degree(const State& s) const { return state_degree(s, alg_); }
    const Tower& tower() const { return p_.tower; }
    StrangeRealization with_cap(const Rat& cap) const { return StrangeRealization(p_, cap); }

    const BosonAlgebra& algebra() const { return alg_; }
    const CurrentSum& e_current() const { return ecur_; }
    const CurrentSum& f_current() const { return fcur_; }

    // asserts that non-integer powers of z cancel after the root-of-unity
    // sum, on every basis state of the window
    CheckReport residue_check(const Rat& max_degree, long mode_margin) const;

private:
    TwistParams p_;
    Rat cap_;
    BosonAlgebra alg_;
    CurrentSum ecur_, fcur_;

    mutable std::map<std::pair<long, State>, Vec> ecache_, fcache_, hcache_;
    Vec cached(int which, long r, const Vec& v) const;
    Vec e_basis(long r, const State& s) const;
    Vec f_basis(long r, const State& s) const;
    Vec h_basis(long k, const State& s) const;
};

// Colored fermion realization on the charge-0 Maya sector.
class FermionRealization {
public:
    using Vec = FermionVector;
    using State = MayaDiagram;

    FermionRealization(TwistParams p, Rat cap);

    Vec e(long r, const Vec& v) const;
    Vec f(long r, const Vec& v) const;
    Vec h(long k, const Vec& v) const;
    long c() const { return p_.n; }
    long cprime() const { return p_.n_tw; }

    std::vector<State> states(const Rat& max_degree) const;
    Vec basis(const State& s) const { return Vec::basis(s); }
    Scalar coeff(const Vec& v, const State& s) const { return v.coeff(s); }
    Rat degree(const State& s) const { return Rat(s.to_partition().size(), p_.n); }
    const Tower& tower() const { return p_.tower; }
    FermionRealization with_cap(const Rat& cap) const { return FermionRealization(p_, cap); }

private:
    TwistParams p_;
    Rat cap_;
    long box_cap_;

    Vec bilinear(int sign, long r, const Vec& v) const;
    Vec h_direct(long k, const Vec& v) const;

    mutable std::map<std::pair<long, State>, Vec> ecache_, fcache_, hcache_;
    Vec cached(int which, long r, const Vec& v) const;
};

// Sublattice restriction: E^tw[r] = E^{[1/n]}_{1, n r + n_tw} on the single
// Fock module of the q^{1/n} tower in the partition basis.
class RestrictionRealization {
public:
    using Vec = GradedVector;
    using State = Partition;

    RestrictionRealization(TwistParams p, Rat cap);

    Vec e(long r, const Vec& v) const;
    Vec f(long r, const Vec& v) const;
    Vec h(long k, const Vec& v) const;
    long c() const { return p_.n; }
    long cprime() const { return p_.n_tw; }

    std::vector<State> states(const Rat& max_degree) const;
    Vec basis(const State& s) const { return Vec::basis({s}); }
    Scalar coeff(const Vec& v, const State& s) const { return v.coeff({s}); }
    Rat degree(const State& s) const { return Rat(s.size(), p_.n); }
    const Tower& tower() const { return p_.tower; }
    RestrictionRealization with_cap(const Rat& cap) const {
        return RestrictionRealization(p_, cap);
    }

    const FockConfig& config() const { return cfg_; }

private:
    TwistParams p_;
    Rat cap_;
    FockConfig cfg_;

    mutable std::map<std::pair<long, State>, Vec> ecache_, fcache_, hcache_;
    Vec cached(int which, long r, const Vec& v) const;
};

// ---- relation battery (shared with the untwisted checks) ----

template <class R>
CheckReport twisted_relations_check(const R& real0, long mode_bound, const Rat& deg_window);

// graded dimensions, indexed by micro degree (degree * n)
template <class R>
std::vector<long> realization_character(const R& real, long micro_max);

// per-micro-degree traces of H_{-1} H_1 and E^tw_j F^tw_{-j} probes
struct Fingerprint {
    std::vector<Scalar> hh;                       // Tr(H_{-1} H_1)
    std::map<long, std::vector<Scalar>> ef;       // j -> Tr(E_j F_{-j})
    bool operator==(const Fingerprint&) const = default;
};

template <class R>
Fingerprint realization_fingerprint(const R& real, long micro_max, long mode_bound);

// ---- decomposition checks ----

struct DecompositionReport {
    bool pass = true;
    std::string detail;
    std::vector<long> lhs_character;
    std::vector<long> rhs_character;
};

// Character identity for the restriction of the fine Fock module to the
// (n, n_tw) sublattice against the lattice sum of twisted tensor characters.
DecompositionReport decomposition_character_check(long n, long n_tw, long micro_max);

// Vector-level equivariance of the quotient isomorphism for n_tw = 0:
// iso(E^{[1/n]}_{a, nb} x) = sum-of-factors action of E_{a,b} on iso(x).
CheckReport decomposition_equivariance_check(long n, long box_window, const Tower& tower);

// tensor basis re-encoding of a single partition via core/quotient, with the
// fermionic shuffle sign (color r in tensor slot r)
std::pair<LatticePoint, GradedVector> quotient_encode(const Partition& lambda, long n);

} // namespace qdiff

#include "qdiff/twisted_impl.hpp"

#endif
