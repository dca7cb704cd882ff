#ifndef QDIFF_CYCLO_HPP
#define QDIFF_CYCLO_HPP

#include "qdiff/rat.hpp"

#include <vector>

namespace qdiff {

// Element of Q(zeta_M), reduced modulo the M-th cyclotomic polynomial.
// Coefficients are with respect to 1, zeta, ..., zeta^{phi(M)-1}.
// Order M = 1 is plain Q. Elements of different orders mix only when one
// order divides the other (the smaller embeds via zeta_M = zeta_N^{N/M}).
class Cyclo {
public:
    Cyclo() : order_(1), c_(1, Rat(0)) {}
    explicit Cyclo(const Rat& r) : order_(1), c_(1, r) {}
    Cyclo(long order, std::vector<Rat> coeffs);

    static Cyclo zeta(long order, long power = 1);
    static long phi(long m);
    // Coefficients of the (monic, integral) M-th cyclotomic polynomial.
    static const std::vector<Rat>& cyclotomic_poly(long m);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const; // coefficient of zeta^0
    Rat as_rational() const;   // throws if not rational

    Cyclo promoted(long order) const; // embed into Q(zeta_order); order_ | order

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo inverse() const;

    bool operator==(const Cyclo& b) const;
    bool operator!=(const Cyclo& b) const { return !(*this == b); }

    // gcd of the numerators / lcm of denominators over all coordinates.
    Rat content() const;

    std::string str() const;

private:
    long order_;
    std::vector<Rat> c_; // size phi(order_)

    void reduce_mod_cyclotomic(std::vector<Rat>& raw) const;
    static std::pair<long, const Cyclo*> align(const Cyclo& a, const Cyclo& b,
                                               Cyclo& sa, Cyclo& sb);
};

inline Cyclo operator*(const Rat& r, const Cyclo& c) { return Cyclo(r) * c; }

} // namespace qdiff

#endif
