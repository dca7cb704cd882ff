#include "qdiff/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qdiff {

namespace {
constexpr size_t kReduceThreshold = 28;

Rat cyclo_rat_content(const LaurentPoly& p) {
    Rat c(0);
    for (const auto& [k, x] : p.terms()) {
        Rat cx = abs(x.content());
        if (cx == 0) continue;
        if (c == 0) {
            c = cx;
        } else {
            Int cn = c.get_num(), cd = c.get_den(), xn = cx.get_num(), xd = cx.get_den();
            Int g, l;
            mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), xn.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), cd.get_mpz_t(), xd.get_mpz_t());
            c = Rat(g, l);
        }
    }
    return c;
}
} // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("Scalar: zero denominator");
    fast_normalize();
}

Scalar Scalar::t_pow(long e) { return monomial(Cyclo(Rat(1)), e, 0); }
Scalar Scalar::v_pow(long e) { return monomial(Cyclo(Rat(1)), 0, e); }

Scalar Scalar::monomial(const Cyclo& c, long et, long ev) {
    Scalar s;
    s.num_ = LaurentPoly::monomial(c, et, ev);
    s.den_ = LaurentPoly(Rat(1));
    return s;
}

bool Scalar::is_one() const { return num_ == den_; }

bool Scalar::is_rational() const {
    return num_.is_constant() && den_.is_constant() && num_.constant_value().is_rational() &&
           den_.constant_value().is_rational();
}

Rat Scalar::as_rational() const {
    if (num_.is_zero()) return Rat(0);
    if (!is_rational()) throw error("Scalar::as_rational: not rational: " + str());
    return num_.constant_value().as_rational() / den_.constant_value().as_rational();
}

void Scalar::fast_normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    if (den_.is_monomial()) {
        num_ = num_.divide_exact(den_);
        den_ = LaurentPoly(Rat(1));
        return;
    }
    if (num_.term_count() + den_.term_count() > kReduceThreshold) reduce();
}

void Scalar::reduce() {
    if (num_.is_zero() || den_.is_monomial()) {
        fast_normalize();
        return;
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_constant() || !g.is_zero()) {
        if (!(g.is_constant())) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    if (den_.is_monomial()) {
        num_ = num_.divide_exact(den_);
        den_ = LaurentPoly(Rat(1));
    }
}

void Scalar::canonicalize() {
    reduce();
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    // Clear negative exponents jointly.
    long mt = std::min(num_.min_t(), den_.min_t());
    long mv = std::min(num_.min_v(), den_.min_v());
    if (mt != 0 || mv != 0) {
        num_ = num_.shifted(-mt, -mv);
        den_ = den_.shifted(-mt, -mv);
    }
    // Numerator primitive with positive head coefficient.
    Rat c = cyclo_rat_content(num_);
    const Cyclo& head = num_.terms().begin()->second;
    Rat lead(0);
    for (const auto& x : head.coeffs())
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead < 0) c = -c;
    if (c != 0 && c != 1) {
        Cyclo ic{Rat(1) / c};
        num_ = num_.scaled(ic);
        den_ = den_.scaled(ic);
    }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Scalar r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.fast_normalize();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return a;
    Scalar r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ - b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.fast_normalize();
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    Scalar r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.fast_normalize();
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw error("Scalar: division by zero");
    if (a.is_zero()) return Scalar();
    Scalar r;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.fast_normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

bool Scalar::operator==(const Scalar& b) const {
    if (num_.is_zero()) return b.num_.is_zero();
    if (b.num_.is_zero()) return false;
    return num_ * b.den_ == b.num_ * den_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("Scalar::inverse: division by zero");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.fast_normalize();
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1L);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Scalar acc(1L);
    while (k) {
        if (k & 1) acc *= base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return acc;
}

std::optional<std::tuple<Cyclo, long, long>> Scalar::as_monomial() const {
    Scalar c = *this;
    c.reduce();
    if (c.num_.is_zero()) return std::nullopt;
    if (!c.num_.is_monomial() || !c.den_.is_monomial()) return std::nullopt;
    auto [kn, cn] = *c.num_.terms().begin();
    auto [kd, cd] = *c.den_.terms().begin();
    return std::tuple<Cyclo, long, long>{cn * cd.inverse(), kn.first - kd.first,
                                         kn.second - kd.second};
}

Scalar Scalar::monomial_pow(const Rat& e) const {
    if (is_integer(e)) return pow(to_long(e));
    auto m = as_monomial();
    if (!m) throw error("Scalar::monomial_pow: not a monomial: " + str());
    auto [c, a, b] = *m;
    if (!(c.is_rational() && c.rational_part() == 1))
        throw error("Scalar::monomial_pow: coefficient must be 1, got " + c.str());
    Rat ea = e * a, eb = e * b;
    if (!is_integer(ea) || !is_integer(eb))
        throw error("Scalar::monomial_pow: fractional exponent not representable");
    return monomial(Cyclo(Rat(1)), to_long(ea), to_long(eb));
}

// ---- Tower ----

Scalar Tower::q(const Rat& e) const {
    Rat te = e * L;
    if (!is_integer(te))
        throw error("Tower::q: exponent " + e.get_str() + " not representable with L=" +
                    std::to_string(L));
    return Scalar::t_pow(to_long(te));
}

Scalar Tower::u(const Rat& e) const {
    Rat ve = e * n;
    if (!is_integer(ve))
        throw error("Tower::u: exponent " + e.get_str() + " not representable with n=" +
                    std::to_string(n));
    return Scalar::v_pow(to_long(ve));
}

Scalar Tower::zeta(long power) const { return Scalar(Cyclo::zeta(M, power)); }

Scalar Tower::minus_one_root(long root_order) const {
    if (root_order == 1) return Scalar(-1L);
    if (M % (2 * root_order) != 0)
        throw error("Tower::minus_one_root: M must be a multiple of " +
                    std::to_string(2 * root_order));
    return Scalar(Cyclo::zeta(M, M / (2 * root_order)));
}

std::optional<Rat> Tower::log_q(const Scalar& s) const {
    auto m = s.as_monomial();
    if (!m) return std::nullopt;
    auto [c, a, b] = *m;
    if (b != 0) return std::nullopt;
    if (!(c.is_rational() && c.rational_part() == 1)) return std::nullopt;
    return Rat(a, L);
}

// ---- rendering ----

namespace {
std::string side_str(const LaurentPoly& p, bool denominator) {
    std::string s = p.str();
    if (p.term_count() > 1) return "(" + s + ")";
    if (p.term_count() == 1) {
        const auto& [k, c] = *p.terms().begin();
        bool fractional = c.is_rational() && c.rational_part().get_den() != 1;
        bool composite = s.find('*') != std::string::npos || s.find('-') != std::string::npos;
        if (fractional && (k.first != 0 || k.second != 0)) {
            Rat r = c.rational_part();
            std::ostringstream os;
            os << "(" << r.get_str() << ")*";
            if (k.first != 0) {
                os << "t";
                if (k.first != 1) os << "^" << k.first;
                if (k.second != 0) os << "*";
            }
            if (k.second != 0) {
                os << "v";
                if (k.second != 1) os << "^" << k.second;
            }
            s = os.str();
            composite = true;
        } else if (fractional) {
            return "(" + c.rational_part().get_str() + ")";
        }
        if (denominator && composite) return "(" + s + ")";
    }
    return s;
}
} // namespace

std::string Scalar::str() const {
    Scalar c = *this;
    c.canonicalize();
    if (c.num_.is_zero()) return "0";
    if (c.den_.is_constant() && c.den_.constant_value().is_rational() &&
        c.den_.constant_value().rational_part() == 1)
        return c.num_.str();
    return side_str(c.num_, false) + "/" + side_str(c.den_, true);
}

// ---- parsing of the canonical rendering ----

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw error("Scalar::parse: " + why + " at offset " + std::to_string(i) + " in '" + s +
                    "'");
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        long value = std::stol(s.substr(start, i - start));
        return neg ? -value : value;
    }

    Scalar parse_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected number");
        Int numerator(s.substr(start, i - start));
        if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            // rational literal inside parentheses, e.g. (3/2)
            ++i;
            size_t d0 = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            Int denominator(s.substr(d0, i - d0));
            return Scalar(Rat(numerator, denominator));
        }
        return Scalar(Rat(numerator));
    }

    Scalar parse_factor(bool inside_paren) {
        skip_ws();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            Scalar e = parse_expr(true);
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) return e.pow(parse_int());
            return e;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Scalar v = parse_number();
            // only rational literals inside parens carry '/'; out here a '/'
            // belongs to the fraction bar, handled by parse_expr(false).
            (void)inside_paren;
            return v;
        }
        if (c == 't' || c == 'v') {
            ++i;
            long e = eat('^') ? parse_int() : 1;
            return c == 't' ? Scalar::t_pow(e) : Scalar::v_pow(e);
        }
        if (s.compare(i, 4, "zeta") == 0) {
            i += 4;
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected cyclotomic order");
            long order = std::stol(s.substr(start, i - start));
            long e = eat('^') ? parse_int() : 1;
            return Scalar(Cyclo::zeta(order, e));
        }
        fail("unexpected character");
    }

    Scalar parse_term(bool inside_paren) {
        Scalar acc = parse_factor(inside_paren);
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc *= parse_factor(inside_paren);
            } else {
                break;
            }
        }
        return acc;
    }

    Scalar parse_sum(bool inside_paren) {
        skip_ws();
        bool neg = eat('-');
        Scalar acc = parse_term(inside_paren);
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc += parse_term(inside_paren);
            } else if (peek('-')) {
                ++i;
                acc -= parse_term(inside_paren);
            } else {
                break;
            }
        }
        return acc;
    }

    Scalar parse_expr(bool inside_paren) {
        Scalar numerator = parse_sum(inside_paren);
        skip_ws();
        if (!inside_paren && eat('/')) {
            Scalar denominator = parse_sum(false);
            return numerator / denominator;
        }
        return numerator;
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    Scalar v = p.parse_expr(false);
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing characters");
    return v;
}

} // namespace qdiff
