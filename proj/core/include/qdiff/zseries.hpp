#ifndef QDIFF_ZSERIES_HPP
#define QDIFF_ZSERIES_HPP

#include "qdiff/scalar.hpp"

#include <vector>

namespace qdiff {

// Truncated formal series z^gamma * sum_m c[m] z^{m/step_den}, with Scalar
// coefficients. The window of known coefficients is [gamma, top()]:
// coefficients below gamma are identically zero, coefficients above top()
// are unknown (truncated away). Arithmetic aligns offsets by refining the
// step to a common denominator, so incompatible offsets merge exactly.
class ZSeries {
public:
    ZSeries() : gamma_(0), s_(1), c_(1, Scalar()) {}
    ZSeries(Rat gamma, long step_den, std::vector<Scalar> coeffs);

    static ZSeries zero(const Rat& gamma, long step_den, long count);
    static ZSeries constant(const Scalar& value, long order_count);
    // c * z^e, known through z^{e + count/step}
    static ZSeries monomial(const Scalar& c, const Rat& e, long step_den, long count);

    const Rat& gamma() const { return gamma_; }
    long step_den() const { return s_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Rat exponent_at(size_t m) const { return gamma_ + Rat(m, s_); }
    Rat top() const { return gamma_ + Rat(static_cast<long>(c_.size()) - 1, s_); }

    // Coefficient of z^e; zero below the window, error above it.
    Scalar coeff(const Rat& e) const;
    bool known_through(const Rat& e) const { return e <= top(); }

    ZSeries rebased(const Rat& new_gamma, long new_step) const;
    ZSeries truncated(const Rat& new_top) const;
    ZSeries shifted(const Rat& dz) const; // multiply by z^{dz}

    friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    ZSeries operator-() const;
    ZSeries scaled(const Scalar& c) const;

    // exp of a series with strictly positive leading exponent.
    ZSeries exp() const;

    bool is_zero() const;
    // Exact equality of all coefficients on the intersection of windows up
    // to `through` (must be inside both windows).
    static bool agree(const ZSeries& a, const ZSeries& b, const Rat& through);

    std::string str() const;

private:
    Rat gamma_;
    long s_;
    std::vector<Scalar> c_;
};

// sum_m binom(e, m) (-rho)^m x^m through x^order (step 1, offset 0).
ZSeries binomial_series(const Scalar& rho, const Rat& e, long order);

// (a z^r; q1, q2)_inf with q1 = q^{q1exp}, q2 = q^{q2exp}, truncated so the
// window top is `order_top` (in z-exponent units). Requires r > 0.
ZSeries double_pochhammer(const Scalar& a, const Rat& r, const Rat& q1exp, const Rat& q2exp,
                          const Rat& order_top, const Tower& tower);

} // namespace qdiff

#endif
