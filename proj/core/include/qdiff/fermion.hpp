#ifndef QDIFF_FERMION_HPP
#define QDIFF_FERMION_HPP

#include "qdiff/maya.hpp"

#include <map>

namespace qdiff {

// Linear combinations of Maya basis states with the wedge sign rule:
// creating or removing a particle at position p costs (-1)^{#occupied < p}.
class FermionVector {
public:
    using Terms = std::map<MayaDiagram, Scalar>;

    FermionVector() = default;
    static FermionVector basis(const MayaDiagram& m, const Scalar& c = Scalar(1L));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const MayaDiagram& m) const;

    void add_term(const MayaDiagram& m, const Scalar& c);
    void add_scaled(const FermionVector& v, const Scalar& c);
    FermionVector scaled(const Scalar& c) const;
    friend FermionVector operator+(const FermionVector& a, const FermionVector& b);
    friend FermionVector operator-(const FermionVector& a, const FermionVector& b);
    bool operator==(const FermionVector& b) const { return terms_ == b.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

FermionVector create_at(long p, const FermionVector& v);
FermionVector annihilate_at(long p, const FermionVector& v);

// Sign relating the charge-0 basis state |lambda> to the ordered tensor
// product of its n quotient states (color r in tensor slot r, colored
// creation words concatenated color 0 leftmost).
int quotient_shuffle_sign(const Partition& lambda, long n);

} // namespace qdiff

#endif
