#include "qdiff/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qdiff {

namespace {

// Polynomial helpers on dense Rat vectors (index = power).
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a mod b, b monic-ish (divides by leading coefficient).
Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_divexact(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.empty() ? 0 : (a.size() >= b.size() ? a.size() - b.size() + 1 : 0), Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty()) throw error("cyclotomic: non-exact division");
    return q;
}

} // namespace

long Cyclo::phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<Rat>& Cyclo::cyclotomic_poly(long m) {
    static std::map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const Poly& pd = [&]() -> const Poly& {
            auto jt = cache.find(d);
            if (jt != cache.end()) return jt->second;
            throw error("cyclotomic cache miss"); // filled in order below
        }();
        num = poly_divexact(num, pd);
    }
    return cache.emplace(m, std::move(num)).first->second;
}

namespace {
// Ensure divisors are cached before use.
void warm_cyclotomic(long m) {
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) Cyclo::cyclotomic_poly(d);
}
} // namespace

Cyclo::Cyclo(long order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
    warm_cyclotomic(order);
    long ph = phi(order);
    if (static_cast<long>(c_.size()) > ph) {
        reduce_mod_cyclotomic(c_);
    }
    c_.resize(ph, Rat(0));
}

void Cyclo::reduce_mod_cyclotomic(std::vector<Rat>& raw) const {
    Poly r = poly_rem(raw, cyclotomic_poly(order_));
    r.resize(phi(order_), Rat(0));
    raw = std::move(r);
}

Cyclo Cyclo::zeta(long order, long power) {
    warm_cyclotomic(order);
    power %= order;
    if (power < 0) power += order;
    std::vector<Rat> raw(power + 1, Rat(0));
    raw[power] = 1;
    return Cyclo(order, std::move(raw));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

Rat Cyclo::as_rational() const {
    if (!is_rational()) throw error("Cyclo::as_rational: element not rational: " + str());
    return rational_part();
}

Cyclo Cyclo::promoted(long order) const {
    if (order == order_) return *this;
    if (order % order_ != 0) throw error("Cyclo::promoted: incompatible orders");
    long step = order / order_;
    std::vector<Rat> raw(static_cast<size_t>((c_.size() - 1) * step + 1), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return Cyclo(order, std::move(raw));
}

std::pair<long, const Cyclo*> Cyclo::align(const Cyclo& a, const Cyclo& b, Cyclo& sa, Cyclo& sb) {
    long m = std::lcm(a.order_, b.order_);
    sa = a.promoted(m);
    sb = b.promoted(m);
    return {m, nullptr};
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo x, y;
    Cyclo::align(a, b, x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    Cyclo x, y;
    Cyclo::align(a, b, x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    Cyclo x, y;
    Cyclo::align(a, b, x, y);
    std::vector<Rat> raw = poly_mul(x.c_, y.c_);
    return Cyclo(x.order_, std::move(raw));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw error("Cyclo::inverse: division by zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.c_[0] = Rat(1) / r.c_[0];
        return r;
    }
    // Extended Euclid in Q[x] against Phi_M.
    Poly r0 = cyclotomic_poly(order_);
    Poly r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rat(1)};
    while (true) {
        trim(r1);
        if (r1.empty()) throw error("Cyclo::inverse: not invertible (unexpected)");
        if (r1.size() == 1) {
            // gcd reached: scale s1 by 1/r1[0]
            for (auto& v : s1) v /= r1[0];
            return Cyclo(order_, std::move(s1));
        }
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        Poly r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rat f = r2.back() / r1.back();
            size_t off = r2.size() - r1.size();
            q[off] = f;
            for (size_t i = 0; i < r1.size(); ++i) r2[off + i] -= f * r1[i];
            trim(r2);
        }
        Poly s2 = s0;
        {
            Poly qs = poly_mul(q, s1);
            s2.resize(std::max(s2.size(), qs.size()), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

bool Cyclo::operator==(const Cyclo& b) const {
    Cyclo x, y;
    align(*this, b, x, y);
    return x.c_ == y.c_;
}

Rat Cyclo::content() const {
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& x : c_) {
        if (x == Rat(0)) continue;
        Int xn = x.get_num(), xd = x.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), xn.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), xd.get_mpz_t());
    }
    if (num_gcd == 0) return Rat(0);
    return Rat(num_gcd, den_lcm);
}

std::string Cyclo::str() const {
    if (is_rational()) return rational_part().get_str();
    std::ostringstream os;
    bool first = true;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        } else {
            if (v < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        }
        if (i == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << "zeta" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    return os.str();
}

} // namespace qdiff
