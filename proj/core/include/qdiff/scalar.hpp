#ifndef QDIFF_SCALAR_HPP
#define QDIFF_SCALAR_HPP

#include "qdiff/laurent.hpp"
#include "qdiff/rat.hpp"

#include <optional>
#include <string>

namespace qdiff {

// Element of the fraction field Q(zeta_M)(t, v). Interpretation of the
// variables (t = q^{1/L}, v = u^{1/n}) lives in Tower; the arithmetic here is
// context free. Fractions are reduced lazily: equality goes through
// cross-multiplication, gcd reduction fires on a size threshold and at
// canonicalization points (rendering, pivots).
class Scalar {
public:
    Scalar() : num_(), den_(Rat(1)) {}
    explicit Scalar(const Rat& r) : num_(r), den_(Rat(1)) {}
    explicit Scalar(long n) : num_(Rat(n)), den_(Rat(1)) {}
    explicit Scalar(const Cyclo& c) : num_(c), den_(Rat(1)) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar t_pow(long e);
    static Scalar v_pow(long e);
    static Scalar monomial(const Cyclo& c, long et, long ev);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const;
    Rat as_rational() const;

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    Scalar inverse() const;
    Scalar pow(long e) const;
    // (c * t^a v^b)^e for rational e; requires a monomial with coefficient 1
    // and integral resulting exponents.
    Scalar monomial_pow(const Rat& e) const;

    // If the value is c * t^a * v^b, return (c, a, b).
    std::optional<std::tuple<Cyclo, long, long>> as_monomial() const;

    void reduce();        // gcd reduction, keeps value
    void canonicalize();  // reduce + canonical scaling / exponent shift

    size_t size() const { return num_.term_count() + den_.term_count(); }

    std::string str() const; // canonical textual rendering
    static Scalar parse(const std::string& text);

private:
    LaurentPoly num_, den_;
    void fast_normalize();
};

// Interpretation context: t = q^{1/L}, v = u^{1/n}, cyclotomic order M.
struct Tower {
    long L = 2;
    long M = 1;
    long n = 1;

    Scalar q(const Rat& e) const; // q^e as a t-power
    Scalar q1() const { return q(Rat(1)); }
    Scalar u(const Rat& e) const; // u^e as a v-power
    Scalar zeta(long power = 1) const;
    Scalar minus_one_root(long root_order) const; // (-1)^{1/root_order}

    // exponent e with q^e == s, when s is a pure t-power monomial.
    std::optional<Rat> log_q(const Scalar& s) const;

    // q^{a/2} - q^{-a/2}
    Scalar sinh_q(const Rat& a) const { return q(a / 2) - q(-a / 2); }
};

} // namespace qdiff

#endif
