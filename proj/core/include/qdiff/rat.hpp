#ifndef QDIFF_RAT_HPP
#define QDIFF_RAT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdiff {

using Int = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational scalar: a canonicalizing wrapper around mpq_class (the raw
// two-argument mpq constructors do not reduce, which breaks mpq_equal).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(const Int& n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw error("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(const Int& n, const Int& d) : v_(n, d) {
        if (d == 0) throw error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    Int get_num() const { return v_.get_num(); }
    Int get_den() const { return v_.get_den(); }
    std::string get_str() const { return v_.get_str(); }
    double get_d() const { return v_.get_d(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return from_canonical(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return from_canonical(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return from_canonical(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.v_ == 0) throw error("Rat: division by zero");
        return from_canonical(a.v_ / b.v_);
    }
    Rat operator-() const { return from_canonical(-v_); }
    Rat& operator+=(const Rat& b) {
        v_ += b.v_;
        return *this;
    }
    Rat& operator-=(const Rat& b) {
        v_ -= b.v_;
        return *this;
    }
    Rat& operator*=(const Rat& b) {
        v_ *= b.v_;
        return *this;
    }
    Rat& operator/=(const Rat& b) {
        if (b.v_ == 0) throw error("Rat: division by zero");
        v_ /= b.v_;
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;

    static Rat from_canonical(const mpq_class& v) {
        Rat r;
        r.v_ = v;
        return r;
    }
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw error("to_long: not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw error("to_long: overflow");
    return r.get_num().get_si();
}

// Floor of a rational.
inline Int rat_floor(const Rat& r) {
    Int q;
    Int num = r.get_num(), den = r.get_den();
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline long den_long(const Rat& r) {
    if (!r.get_den().fits_slong_p()) throw error("den_long: overflow");
    return r.get_den().get_si();
}

// binom(e, m) for rational e and integer m >= 0.
inline Rat rat_binom(const Rat& e, long m) {
    Rat acc(1);
    for (long i = 0; i < m; ++i) acc *= (e - Rat(i)) / Rat(i + 1);
    return acc;
}

inline Rat parse_rat(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw error("parse_rat: bad literal '" + s + "'");
    r.canonicalize();
    return Rat(r);
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

} // namespace qdiff

#endif
