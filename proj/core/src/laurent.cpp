#include "qdiff/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qdiff {

LaurentPoly::LaurentPoly(const Cyclo& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
}

LaurentPoly LaurentPoly::monomial(const Cyclo& c, long et, long ev) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[{et, ev}] = c;
    return p;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

bool LaurentPoly::depends_on_v() const {
    for (const auto& [k, c] : terms_)
        if (k.second != 0) return true;
    return false;
}

Cyclo LaurentPoly::constant_value() const {
    if (terms_.empty()) return Cyclo(Rat(0));
    if (!is_constant()) throw error("LaurentPoly::constant_value: not constant");
    return terms_.begin()->second;
}

long LaurentPoly::min_t() const {
    long m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.first < m) m = k.first;
        first = false;
    }
    return m;
}
long LaurentPoly::max_t() const {
    long m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.first > m) m = k.first;
        first = false;
    }
    return m;
}
long LaurentPoly::min_v() const {
    long m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.second < m) m = k.second;
        first = false;
    }
    return m;
}
long LaurentPoly::max_v() const {
    long m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.second > m) m = k.second;
        first = false;
    }
    return m;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = c;
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = -c;
        else
            it->second = it->second - c;
    }
    r.prune();
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            LaurentPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_[k] = ca * cb;
            else
                it->second = it->second + ca * cb;
        }
    }
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long dt, long dv) const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first + dt, k.second + dv}] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclo& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.terms_[k] = x * c;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw error("LaurentPoly::divide_exact: divide by zero");
    if (is_zero()) return LaurentPoly();
    if (d.is_monomial()) {
        const auto& [k, c] = *d.terms_.begin();
        Cyclo inv = c.inverse();
        LaurentPoly r;
        for (const auto& [kk, cc] : terms_) r.terms_[{kk.first - k.first, kk.second - k.second}] = cc * inv;
        return r;
    }
    LaurentPoly r = *this;
    LaurentPoly q;
    const auto& dl = *d.terms_.rbegin(); // lex-max term of divisor
    Cyclo dinv = dl.second.inverse();
    size_t guard = terms_.size() * d.terms_.size() + terms_.size() + 64;
    while (!r.terms_.empty()) {
        if (guard-- == 0) throw error("LaurentPoly::divide_exact: not divisible");
        const auto& rl = *r.terms_.rbegin();
        Key qk{rl.first.first - dl.first.first, rl.first.second - dl.first.second};
        Cyclo qc = rl.second * dinv;
        q.terms_[qk] = qc;
        r = r - d.shifted(qk.first, qk.second).scaled(qc);
    }
    q.prune();
    return q;
}

namespace {

// ---- dense univariate helpers over Cyclo (variable = t or v) ----
using UPoly = std::vector<Cyclo>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly to_upoly(const LaurentPoly& p, bool in_t) {
    UPoly u;
    for (const auto& [k, c] : p.terms()) {
        long e = in_t ? k.first : k.second;
        if (e < 0) throw error("to_upoly: negative exponent");
        if (static_cast<long>(u.size()) <= e) u.resize(e + 1, Cyclo(Rat(0)));
        u[e] = u[e] + c;
    }
    utrim(u);
    return u;
}

LaurentPoly from_upoly(const UPoly& u, bool in_t) {
    LaurentPoly p;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        p = p + LaurentPoly::monomial(u[i], in_t ? static_cast<long>(i) : 0,
                                      in_t ? 0 : static_cast<long>(i));
    }
    return p;
}

void make_primitive(UPoly& p) {
    // Divide by the rational content so coefficients stay small in Euclid.
    Rat c(0);
    for (const auto& x : p) {
        Rat cx = x.content();
        if (cx == 0) continue;
        if (c == 0) {
            c = abs(cx);
        } else {
            Rat ax = abs(cx);
            Int cn = c.get_num(), cd = c.get_den(), an = ax.get_num(), ad = ax.get_den();
            Int g, l;
            mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), an.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), cd.get_mpz_t(), ad.get_mpz_t());
            c = Rat(g, l);
        }
    }
    if (c == 0 || c == 1) return;
    Cyclo ic{Rat(1) / c};
    for (auto& x : p) x = x * ic;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        // a mod b
        Cyclo lead_inv = b.back().inverse();
        while (a.size() >= b.size() && !a.empty()) {
            Cyclo f = a.back() * lead_inv;
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
            utrim(a);
        }
        make_primitive(a);
        std::swap(a, b);
    }
    if (a.empty()) return a;
    // normalize monic
    Cyclo inv = a.back().inverse();
    for (auto& x : a) x = x * inv;
    return a;
}

// ---- bivariate: polynomials in t over Q(zeta)[v] ----
using TPoly = std::vector<LaurentPoly>; // index = t-exponent, entries univariate in v

void ttrim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly to_tpoly(const LaurentPoly& p) {
    TPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (k.first < 0 || k.second < 0) throw error("to_tpoly: negative exponent");
        if (static_cast<long>(r.size()) <= k.first) r.resize(k.first + 1);
        r[k.first] = r[k.first] + LaurentPoly::monomial(c, 0, k.second);
    }
    ttrim(r);
    return r;
}

LaurentPoly from_tpoly(const TPoly& p) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i) r = r + p[i].shifted(static_cast<long>(i), 0);
    return r;
}

LaurentPoly v_content(const TPoly& p) {
    LaurentPoly g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : LaurentPoly::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? LaurentPoly(Rat(1)) : g;
}

TPoly t_divide(const TPoly& a, const LaurentPoly& c) {
    TPoly r = a;
    for (auto& x : r) x = x.divide_exact(c);
    return r;
}

// Pseudo-remainder of a by b in the main variable t.
TPoly pseudo_rem(TPoly a, const TPoly& b) {
    ttrim(a);
    if (b.empty()) throw error("pseudo_rem: zero divisor");
    const LaurentPoly& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        LaurentPoly la = a.back();
        size_t off = a.size() - b.size();
        // a <- lb*a - la * t^off * b
        for (auto& x : a) x = x * lb;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - la * b[i];
        ttrim(a);
    }
    return a;
}

} // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero()) return b0;
    if (b0.is_zero()) return a0;
    // Work with ordinary polynomials: strip monomial content.
    LaurentPoly a = a0.shifted(-a0.min_t(), -a0.min_v());
    LaurentPoly b = b0.shifted(-b0.min_t(), -b0.min_v());
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly(Rat(1));
    bool va = a.depends_on_v(), vb = b.depends_on_v();
    if (!va && !vb) {
        UPoly g = ugcd(to_upoly(a, true), to_upoly(b, true));
        return from_upoly(g, true);
    }
    bool ta = a.max_t() != 0 || a.min_t() != 0, tb = b.max_t() != 0 || b.min_t() != 0;
    if (!ta && !tb) {
        UPoly g = ugcd(to_upoly(a, false), to_upoly(b, false));
        return from_upoly(g, false);
    }
    if ((!va && vb) || (va && !vb) || !ta || !tb) {
        // Mixed pure cases rarely share factors beyond constants; the only
        // possible common divisors involve both variables' contents.
        LaurentPoly ca = va && ta ? v_content(to_tpoly(a)) : a;
        LaurentPoly cb = vb && tb ? v_content(to_tpoly(b)) : b;
        if ((!va && vb) || (va && !vb)) return LaurentPoly(Rat(1));
        return gcd(ca, cb);
    }
    // Primitive PRS in t over Q(zeta)[v].
    TPoly pa = to_tpoly(a), pb = to_tpoly(b);
    LaurentPoly ca = v_content(pa), cb = v_content(pb);
    pa = t_divide(pa, ca);
    pb = t_divide(pb, cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        TPoly r = pseudo_rem(pa, pb);
        if (!r.empty()) r = t_divide(r, v_content(r));
        pa = std::move(pb);
        pb = std::move(r);
    }
    LaurentPoly g = from_tpoly(pa);
    LaurentPoly cg = gcd(ca, cb);
    LaurentPoly result = g * cg;
    // Normalize: head coefficient (lex-max) monic.
    const auto& lead = *result.terms_.rbegin();
    return result.scaled(lead.second.inverse());
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Cyclo coef = c;
        bool neg = false;
        if (coef.is_rational() && coef.rational_part() < 0) {
            neg = true;
            coef = -coef;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool has_var = k.first != 0 || k.second != 0;
        bool coef_one = coef.is_rational() && coef.rational_part() == 1;
        if (!has_var || !coef_one) os << coef.str();
        if (has_var && !coef_one) os << "*";
        if (k.first != 0) {
            os << "t";
            if (k.first != 1) os << "^" << k.first;
            if (k.second != 0) os << "*";
        }
        if (k.second != 0) {
            os << "v";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

} // namespace qdiff
