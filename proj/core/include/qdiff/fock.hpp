#ifndef QDIFF_FOCK_HPP
#define QDIFF_FOCK_HPP

#include "qdiff/partition.hpp"

#include <functional>
#include <map>

namespace qdiff {

// Tensor product of N Fock modules, partition-tuple basis, truncated at a
// total box count. The tower's q is the module's own deformation parameter
// (sublattice constructions pass a rescaled tower).
struct FockConfig {
    Tower tower;
    std::vector<Scalar> u;
    long degree_cap = 0;
    Rat qscale = Rat(1); // module deformation parameter is q^{qscale}

    Scalar q(const Rat& e) const { return tower.q(e * qscale); }
    Scalar sinh_q(const Rat& a) const { return q(a / 2) - q(-a / 2); }

    long factors() const { return static_cast<long>(u.size()); }
    // Lemma-style irreducibility guard: u_i/u_j != q^k for |k| <= 2*degree_cap.
    void check_irreducible() const;
    FockConfig with_cap(long cap) const {
        FockConfig c = *this;
        c.degree_cap = cap;
        return c;
    }
};

using PartitionTuple = std::vector<Partition>;

long tuple_degree(const PartitionTuple& t);
std::vector<PartitionTuple> tuples_of_degree(long factors, long d);

// Finitely supported Scalar combination of partition tuples.
class GradedVector {
public:
    using Terms = std::map<PartitionTuple, Scalar>;

    GradedVector() = default;
    static GradedVector vacuum(long factors);
    static GradedVector basis(PartitionTuple t, Scalar c = Scalar(1L));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const PartitionTuple& t) const;
    long max_degree() const;

    void add_term(const PartitionTuple& t, const Scalar& c);
    void add_scaled(const GradedVector& v, const Scalar& c);
    GradedVector scaled(const Scalar& c) const;
    friend GradedVector operator+(const GradedVector& a, const GradedVector& b);
    friend GradedVector operator-(const GradedVector& a, const GradedVector& b);
    bool operator==(const GradedVector& b) const;

    GradedVector component(long degree) const;

    std::string str() const;

private:
    Terms terms_;
};

// Content-sum convention for the lowering action; `removed_ribbon` is the
// reading consistent with the defining relations (see commutator tests),
// `literal_empty` keeps the verbatim (empty) index set for comparison.
enum class ContentSum { removed_ribbon, literal_empty };

// E_{a,b} in the Lie tensor action (sum over factors); degree shift is -b.
// Components raised above cfg.degree_cap are dropped.
GradedVector act_E(long a, long b, const GradedVector& v, const FockConfig& cfg,
                   ContentSum convention = ContentSum::removed_ribbon);

// Diagonal operator u^{|lambda|} q^{-|lambda|/2 + c(lambda)} per factor,
// applied `power` times (negative powers invert it).
GradedVector i_tau(const GradedVector& v, const FockConfig& cfg, long power = 1);

// Shapovalov pairing of x in F_{u_1} x...x F_{u_N} with y in
// F_{q/u_N} x...x F_{q/u_1}: factor i of x pairs with factor N+1-i of y,
// <lambda|mu> = (-1)^{|lambda|} delta_{lambda, mu'}.
Scalar shapovalov(const GradedVector& x, const GradedVector& y);

// Graded dimensions 0..D of an N-fold tensor Fock module.
std::vector<long> character(long factors, long D);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

// [E_{a1,b1}, E_{a2,b2}] against the defining structure constants with
// (c, c') = (factors, 0), on every basis tuple of degree <= window.
CheckReport commutator_check(long a1, long b1, long a2, long b2, const FockConfig& cfg,
                             long window, ContentSum convention = ContentSum::removed_ribbon);

// Serre and locality windows for the E (sign=+1) or F (sign=-1) family.
CheckReport serre_check(const FockConfig& cfg, long window, long mode_bound, int sign = +1);
CheckReport locality_check(const FockConfig& cfg, long window, long mode_bound, int sign = +1);

// Degree-d Gram matrix of the pairing is nondegenerate.
CheckReport pairing_rank_check(const FockConfig& cfg, const FockConfig& dual_cfg, long degree);

} // namespace qdiff

#endif
