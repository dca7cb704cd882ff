#include "qdiff/zseries.hpp"

#include <sstream>

namespace qdiff {

ZSeries::ZSeries(Rat gamma, long step_den, std::vector<Scalar> coeffs)
    : gamma_(std::move(gamma)), s_(step_den), c_(std::move(coeffs)) {
    if (s_ < 1) throw error("ZSeries: step denominator must be >= 1");
    if (c_.empty()) throw error("ZSeries: empty coefficient window");
}

ZSeries ZSeries::zero(const Rat& gamma, long step_den, long count) {
    return ZSeries(gamma, step_den, std::vector<Scalar>(std::max(1L, count), Scalar()));
}

ZSeries ZSeries::constant(const Scalar& value, long order_count) {
    std::vector<Scalar> c(std::max(1L, order_count), Scalar());
    c[0] = value;
    return ZSeries(Rat(0), 1, std::move(c));
}

ZSeries ZSeries::monomial(const Scalar& value, const Rat& e, long step_den, long count) {
    std::vector<Scalar> c(std::max(1L, count), Scalar());
    c[0] = value;
    return ZSeries(e, step_den, std::move(c));
}

Scalar ZSeries::coeff(const Rat& e) const {
    if (e > top()) throw error("ZSeries::coeff: exponent above truncation window");
    Rat rel = (e - gamma_) * s_;
    if (rel < 0 || !is_integer(rel)) return Scalar();
    return c_[to_long(rel)];
}

ZSeries ZSeries::rebased(const Rat& new_gamma, long new_step) const {
    if (new_step % s_ != 0) throw error("ZSeries::rebased: step must refine");
    Rat lead = (gamma_ - new_gamma) * new_step;
    if (new_gamma > gamma_ || !is_integer(lead)) throw error("ZSeries::rebased: offset misaligned");
    long pad = to_long(lead);
    long stride = new_step / s_;
    std::vector<Scalar> c(pad + (c_.size() - 1) * stride + 1, Scalar());
    for (size_t m = 0; m < c_.size(); ++m) c[pad + m * stride] = c_[m];
    return ZSeries(new_gamma, new_step, std::move(c));
}

ZSeries ZSeries::truncated(const Rat& new_top) const {
    if (new_top >= top()) return *this;
    Rat rel = (new_top - gamma_) * s_;
    long keep = to_long(rat_floor(rel)) + 1;
    if (keep < 1) throw error("ZSeries::truncated: window vanishes");
    return ZSeries(gamma_, s_, std::vector<Scalar>(c_.begin(), c_.begin() + keep));
}

ZSeries ZSeries::shifted(const Rat& dz) const {
    ZSeries r = *this;
    r.gamma_ += dz;
    long d = den_long(r.gamma_);
    if (r.s_ % d != 0) {
        long ns = lcm_long(r.s_, d);
        return r.rebased(r.gamma_, ns);
    }
    return r;
}

namespace {
struct Aligned {
    ZSeries a, b;
    Aligned(const ZSeries& x, const ZSeries& y)
        : a(ZSeries::zero(Rat(0), 1, 1)), b(ZSeries::zero(Rat(0), 1, 1)) {
        Rat g = std::min(x.gamma(), y.gamma());
        long s = lcm_long(x.step_den(), y.step_den());
        Rat diff = x.gamma() - y.gamma();
        s = lcm_long(s, den_long(diff));
        s = lcm_long(s, den_long(g));
        a = x.rebased(g, s);
        b = y.rebased(g, s);
    }
};
} // namespace

ZSeries operator+(const ZSeries& x, const ZSeries& y) {
    Aligned al(x, y);
    Rat t = std::min(x.top(), y.top());
    ZSeries a = al.a.truncated(t), b = al.b.truncated(t);
    size_t n = std::min(a.coeffs().size(), b.coeffs().size());
    std::vector<Scalar> c(n);
    for (size_t i = 0; i < n; ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return ZSeries(a.gamma(), a.step_den(), std::move(c));
}

ZSeries operator-(const ZSeries& x, const ZSeries& y) { return x + (-y); }

ZSeries ZSeries::operator-() const {
    ZSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ZSeries ZSeries::scaled(const Scalar& k) const {
    ZSeries r = *this;
    for (auto& v : r.c_) v = v * k;
    return r;
}

ZSeries operator*(const ZSeries& x, const ZSeries& y) {
    long s = lcm_long(x.step_den(), y.step_den());
    ZSeries a = x.rebased(x.gamma(), s), b = y.rebased(y.gamma(), s);
    Rat g = a.gamma() + b.gamma();
    Rat t = std::min(a.top() + b.gamma(), b.top() + a.gamma());
    long count = to_long((t - g) * s) + 1;
    std::vector<Scalar> c(count, Scalar());
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            if (static_cast<long>(i + j) >= count) break;
            if (b.coeffs()[j].is_zero()) continue;
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    long d = den_long(g);
    long s2 = s % d == 0 ? s : lcm_long(s, d);
    ZSeries r(g, s, std::move(c));
    if (s2 != s) r = r.rebased(g, s2);
    return r;
}

ZSeries ZSeries::exp() const {
    Rat t = top();
    Rat lead(0);
    bool any = false;
    for (size_t m = 0; m < c_.size(); ++m)
        if (!c_[m].is_zero()) {
            lead = exponent_at(m);
            any = true;
            break;
        }
    long s = lcm_long(s_, den_long(gamma_));
    long count = to_long(rat_floor(t * s)) + 1;
    std::vector<Scalar> unit(count, Scalar());
    unit[0] = Scalar(1L);
    ZSeries acc(Rat(0), s, std::move(unit));
    if (!any) return acc;
    if (lead <= 0) throw error("ZSeries::exp: needs positive leading exponent");
    ZSeries running = *this;
    Rat factorial(1);
    long k = 1;
    while (true) {
        factorial *= k;
        acc = acc + running.scaled(Scalar(Rat(1) / factorial));
        ++k;
        if (lead * k > t) break;
        running = (running * *this).truncated(t);
    }
    return acc;
}

bool ZSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool ZSeries::agree(const ZSeries& a, const ZSeries& b, const Rat& through) {
    if (a.top() < through || b.top() < through)
        throw error("ZSeries::agree: window too small for requested order");
    long s = lcm_long(a.step_den(), b.step_den());
    Rat g = std::min(a.gamma(), b.gamma());
    s = lcm_long(s, den_long(a.gamma() - b.gamma()));
    s = lcm_long(s, den_long(g));
    s = lcm_long(s, den_long(through));
    for (Rat e = g; e <= through; e += Rat(1, s)) {
        if (a.coeff(e) != b.coeff(e)) return false;
    }
    return true;
}

std::string ZSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t m = 0; m < c_.size(); ++m) {
        if (c_[m].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[m].str() << ")*z^(" << exponent_at(m).get_str() << ")";
    }
    if (first) os << "0";
    os << " + O(z^(" << Rat(top() + Rat(1, s_)).get_str() << "))";
    return os.str();
}

ZSeries binomial_series(const Scalar& rho, const Rat& e, long order) {
    std::vector<Scalar> c(order + 1);
    Scalar p(1L);
    for (long m = 0; m <= order; ++m) {
        c[m] = Scalar(rat_binom(e, m)) * p;
        p = p * (-rho);
    }
    return ZSeries(Rat(0), 1, std::move(c));
}

ZSeries double_pochhammer(const Scalar& a, const Rat& r, const Rat& q1exp, const Rat& q2exp,
                          const Rat& order_top, const Tower& tower) {
    if (r <= 0) throw error("double_pochhammer: requires positive z-exponent r");
    long s = lcm_long(den_long(r), den_long(order_top));
    long count = to_long(rat_floor(order_top * s)) + 1;
    if (a.is_zero()) {
        std::vector<Scalar> unit(count, Scalar());
        unit[0] = Scalar(1L);
        return ZSeries(Rat(0), s, std::move(unit));
    }
    // -sum_{k >= 1} (a z^r)^k / (k (1 - q1^k)(1 - q2^k))
    std::vector<Scalar> c(count, Scalar());
    Scalar ak(1L);
    for (long k = 1; Rat(k) * r <= order_top; ++k) {
        ak = ak * a;
        Rat e = Rat(k) * r;
        Scalar d1 = Scalar(1L) - tower.q(q1exp * k);
        Scalar d2 = Scalar(1L) - tower.q(q2exp * k);
        if (d1.is_zero() || d2.is_zero()) throw error("double_pochhammer: degenerate q power");
        c[to_long(e * s)] = -(ak / (Scalar(Rat(k)) * d1 * d2));
    }
    ZSeries expo(Rat(0), s, std::move(c));
    return expo.exp();
}

} // namespace qdiff
