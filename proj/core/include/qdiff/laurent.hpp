#ifndef QDIFF_LAURENT_HPP
#define QDIFF_LAURENT_HPP

#include "qdiff/cyclo.hpp"

#include <map>
#include <string>
#include <utility>

namespace qdiff {

// Sparse Laurent polynomial in two formal variables t and v with Cyclo
// coefficients. Terms are keyed by (t-exponent, v-exponent) in lexicographic
// order, which is also the deterministic rendering order.
class LaurentPoly {
public:
    using Key = std::pair<long, long>; // (et, ev)
    using Terms = std::map<Key, Cyclo>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Cyclo& c);
    explicit LaurentPoly(const Rat& r) : LaurentPoly(Cyclo(r)) {}

    static LaurentPoly monomial(const Cyclo& c, long et, long ev);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    bool depends_on_v() const;
    Cyclo constant_value() const; // requires is_constant

    long min_t() const;
    long max_t() const;
    long min_v() const;
    long max_v() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& b) const { return terms_ == b.terms_; }
    bool operator!=(const LaurentPoly& b) const { return !(*this == b); }

    LaurentPoly shifted(long dt, long dv) const;
    LaurentPoly scaled(const Cyclo& c) const;

    // Exact division; throws if the division leaves a remainder.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    // gcd of ordinary-polynomial parts (callers shift exponents first).
    // Result is primitive with a normalized head coefficient.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    size_t term_count() const { return terms_.size(); }

    std::string str() const;

private:
    Terms terms_;

    void prune();
    friend class Scalar;
};

} // namespace qdiff

#endif
