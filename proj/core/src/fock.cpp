#include "qdiff/fock.hpp"

#include <sstream>

namespace qdiff {

void FockConfig::check_irreducible() const {
    for (size_t i = 0; i < u.size(); ++i) {
        for (size_t j = 0; j < u.size(); ++j) {
            if (i == j) continue;
            Scalar ratio = u[i] / u[j];
            for (long k = -2 * degree_cap; k <= 2 * degree_cap; ++k) {
                if (ratio == q(Rat(k)))
                    throw error("FockConfig: reducible parameters, u_i/u_j = q^" +
                                std::to_string(k));
            }
        }
    }
}

long tuple_degree(const PartitionTuple& t) {
    long s = 0;
    for (const auto& p : t) s += p.size();
    return s;
}

std::vector<PartitionTuple> tuples_of_degree(long factors, long d) {
    std::vector<PartitionTuple> out;
    PartitionTuple cur(factors);
    auto rec = [&](auto&& self, long idx, long remaining) -> void {
        if (idx == factors - 1) {
            for (const auto& p : partitions_of(remaining)) {
                cur[idx] = p;
                out.push_back(cur);
            }
            return;
        }
        for (long a = 0; a <= remaining; ++a) {
            for (const auto& p : partitions_of(a)) {
                cur[idx] = p;
                self(self, idx + 1, remaining - a);
            }
        }
    };
    if (factors == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

GradedVector GradedVector::vacuum(long factors) {
    GradedVector v;
    v.terms_[PartitionTuple(factors)] = Scalar(1L);
    return v;
}

GradedVector GradedVector::basis(PartitionTuple t, Scalar c) {
    GradedVector v;
    if (!c.is_zero()) v.terms_[std::move(t)] = std::move(c);
    return v;
}

Scalar GradedVector::coeff(const PartitionTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar() : it->second;
}

long GradedVector::max_degree() const {
    long d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, tuple_degree(t));
    return d;
}

void GradedVector::add_term(const PartitionTuple& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_[t] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GradedVector::add_scaled(const GradedVector& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [t, x] : v.terms_) add_term(t, x * c);
}

GradedVector GradedVector::scaled(const Scalar& c) const {
    GradedVector r;
    if (c.is_zero()) return r;
    for (const auto& [t, x] : terms_) {
        Scalar y = x * c;
        if (!y.is_zero()) r.terms_[t] = y;
    }
    return r;
}

GradedVector operator+(const GradedVector& a, const GradedVector& b) {
    GradedVector r = a;
    for (const auto& [t, c] : b.terms_) r.add_term(t, c);
    return r;
}

GradedVector operator-(const GradedVector& a, const GradedVector& b) {
    GradedVector r = a;
    for (const auto& [t, c] : b.terms_) r.add_term(t, -c);
    return r;
}

bool GradedVector::operator==(const GradedVector& b) const {
    return (*this - b).is_zero();
}

GradedVector GradedVector::component(long degree) const {
    GradedVector r;
    for (const auto& [t, c] : terms_)
        if (tuple_degree(t) == degree) r.terms_[t] = c;
    return r;
}

std::string GradedVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*|";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) os << ";";
            os << t[i].str();
        }
        os << ">";
    }
    return os.str();
}

namespace {

// Single-factor E_{a,b} on |lambda>, parameter u, q from tower.
void act_E_single(long a, long b, const Partition& lambda, const Scalar& coeff_in, long factor,
                  const PartitionTuple& tuple, const FockConfig& cfg, ContentSum convention,
                  GradedVector& out) {
    const Scalar& u = cfg.u[factor];
    if (a == 0 && b == 0) throw error("act_E: (0,0) is not a generator");
    if (b == 0) {
        // u^a (1/(1-q^a) + sum_{i=0}^{l-1} (q^{a(i - lambda_{i+1})} - q^{a i}))
        Scalar eig = (Scalar(1L) - cfg.q(Rat(a))).inverse();
        for (long i = 0; i < lambda.rows(); ++i)
            eig += cfg.q(Rat(a) * Rat(i - lambda.parts()[i])) - cfg.q(Rat(a) * Rat(i));
        eig *= u.monomial_pow(Rat(a));
        out.add_term(tuple, coeff_in * eig);
        return;
    }
    long ribbon = std::labs(b);
    Scalar front = cfg.q(Rat(-a, 2)) * u.monomial_pow(Rat(a));
    long base_content = lambda.content_sum();
    if (b < 0) {
        // raising: add |b|-ribbons, content sum over the added ribbon
        if (tuple_degree(tuple) + ribbon > cfg.degree_cap) return;
        for (const auto& mv : add_ribbons(lambda, ribbon)) {
            long cs = mv.result.content_sum() - base_content;
            Scalar coef = front * cfg.q(Rat(a, ribbon) * Rat(cs));
            if (mv.height % 2) coef = -coef;
            PartitionTuple nt = tuple;
            nt[factor] = mv.result;
            out.add_term(nt, coeff_in * coef);
        }
    } else {
        // lowering: remove b-ribbons
        for (const auto& mv : remove_ribbons(lambda, ribbon)) {
            long cs = 0;
            if (convention == ContentSum::removed_ribbon)
                cs = base_content - mv.result.content_sum();
            Scalar coef = front * cfg.q(Rat(a, ribbon) * Rat(cs));
            if (mv.height % 2) coef = -coef;
            PartitionTuple nt = tuple;
            nt[factor] = mv.result;
            out.add_term(nt, coeff_in * coef);
        }
    }
}

} // namespace

GradedVector act_E(long a, long b, const GradedVector& v, const FockConfig& cfg,
                   ContentSum convention) {
    GradedVector out;
    for (const auto& [t, c] : v.terms()) {
        for (long f = 0; f < cfg.factors(); ++f)
            act_E_single(a, b, t[f], c, f, t, cfg, convention, out);
    }
    return out;
}

GradedVector i_tau(const GradedVector& v, const FockConfig& cfg, long power) {
    GradedVector out;
    for (const auto& [t, c] : v.terms()) {
        Scalar factor(1L);
        for (long f = 0; f < cfg.factors(); ++f) {
            long sz = t[f].size();
            if (sz == 0) continue;
            Scalar one_factor = cfg.u[f].monomial_pow(Rat(sz)) *
                                cfg.q(Rat(-sz, 2) + Rat(t[f].content_sum()));
            factor *= one_factor.pow(power);
        }
        out.add_term(t, c * factor);
    }
    return out;
}

Scalar shapovalov(const GradedVector& x, const GradedVector& y) {
    Scalar acc;
    for (const auto& [t, c] : x.terms()) {
        long n = static_cast<long>(t.size());
        PartitionTuple dual(n);
        long total = 0;
        for (long i = 0; i < n; ++i) {
            dual[n - 1 - i] = t[i].conjugate();
            total += t[i].size();
        }
        Scalar cy = y.coeff(dual);
        if (cy.is_zero()) continue;
        Scalar term = c * cy;
        if (total % 2) term = -term;
        acc += term;
    }
    return acc;
}

std::vector<long> character(long factors, long D) {
    std::vector<long> p(D + 1, 0);
    p[0] = 1;
    // single partition counts by Euler recurrence-free DP
    for (long k = 1; k <= D; ++k)
        for (long d2 = k; d2 <= D; ++d2) p[d2] += p[d2 - k];
    if (factors == 1) return p;
    std::vector<long> acc = p;
    for (long f = 2; f <= factors; ++f) {
        std::vector<long> next(D + 1, 0);
        for (long a = 0; a <= D; ++a)
            for (long b = 0; a + b <= D; ++b) next[a + b] += acc[a] * p[b];
        acc = std::move(next);
    }
    return acc;
}

namespace {

std::string describe_failure(const char* what, const PartitionTuple& t, const GradedVector& lhs,
                             const GradedVector& rhs) {
    std::ostringstream os;
    os << what << " fails on |";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ";";
        os << t[i].str();
    }
    os << ">: lhs=" << lhs.str() << " rhs=" << rhs.str();
    return os.str();
}

} // namespace

CheckReport commutator_check(long a1, long b1, long a2, long b2, const FockConfig& cfg,
                             long window, ContentSum convention) {
    FockConfig big = cfg.with_cap(window + std::labs(b1) + std::labs(b2));
    Scalar c_center(cfg.factors());
    Scalar cp_center; // 0
    for (long d = 0; d <= window; ++d) {
        for (const auto& t : tuples_of_degree(cfg.factors(), d)) {
            GradedVector v = GradedVector::basis(t);
            GradedVector lhs = act_E(a1, b1, act_E(a2, b2, v, big, convention), big, convention) -
                               act_E(a2, b2, act_E(a1, b1, v, big, convention), big, convention);
            GradedVector rhs;
            long sk_lr = b2 * a1 - b1 * a2;
            if (!(a1 + a2 == 0 && b1 + b2 == 0)) {
                Scalar sc = big.q(Rat(sk_lr, 2)) - big.q(Rat(-sk_lr, 2));
                if (!sc.is_zero())
                    rhs = act_E(a1 + a2, b1 + b2, v, big, convention).scaled(sc);
            } else {
                rhs = v.scaled(cp_center * Scalar(a1) + c_center * Scalar(b1));
            }
            // drop pieces the truncation cannot see exactly
            GradedVector diff = lhs - rhs;
            if (!diff.is_zero()) return {false, describe_failure("commutator", t, lhs, rhs)};
        }
    }
    return {};
}

namespace {
GradedVector chev(int sign, long mode, const GradedVector& v, const FockConfig& cfg) {
    return act_E(sign, mode, v, cfg);
}
} // namespace

CheckReport serre_check(const FockConfig& cfg, long window, long mode_bound, int sign) {
    FockConfig big = cfg.with_cap(window + 3 * (mode_bound + 2));
    for (long d = 0; d <= window; ++d) {
        for (const auto& t : tuples_of_degree(cfg.factors(), d)) {
            GradedVector v = GradedVector::basis(t);
            for (long j1 = -mode_bound; j1 <= mode_bound; ++j1)
                for (long j2 = -mode_bound; j2 <= mode_bound; ++j2)
                    for (long j3 = -mode_bound; j3 <= mode_bound; ++j3) {
                        auto inner = [&](long x2, long x3, const GradedVector& w) {
                            return chev(sign, x2, chev(sign, x3, w, big), big) -
                                   chev(sign, x3, chev(sign, x2, w, big), big);
                        };
                        auto triple = [&](long x1, long x2, long x3) {
                            return chev(sign, x1, inner(x2, x3, v), big) -
                                   inner(x2, x3, chev(sign, x1, v, big));
                        };
                        GradedVector total = triple(j1, j2 + 1, j3 - 1) +
                                             triple(j2, j3 + 1, j1 - 1) +
                                             triple(j3, j1 + 1, j2 - 1);
                        if (!total.is_zero())
                            return {false, describe_failure("serre", t, total, GradedVector())};
                    }
        }
    }
    return {};
}

CheckReport locality_check(const FockConfig& cfg, long window, long mode_bound, int sign) {
    FockConfig big = cfg.with_cap(window + 2 * (mode_bound + 3));
    Scalar qq = big.q(Rat(1)) + big.q(Rat(-1));
    for (long d = 0; d <= window; ++d) {
        for (const auto& t : tuples_of_degree(cfg.factors(), d)) {
            GradedVector v = GradedVector::basis(t);
            for (long r = -mode_bound; r <= mode_bound; ++r)
                for (long s = -mode_bound; s <= mode_bound; ++s) {
                    auto comm = [&](long x, long y) {
                        return chev(sign, x, chev(sign, y, v, big), big) -
                               chev(sign, y, chev(sign, x, v, big), big);
                    };
                    GradedVector total =
                        comm(r + 2, s) - comm(r + 1, s + 1).scaled(qq) + comm(r, s + 2);
                    if (!total.is_zero())
                        return {false, describe_failure("locality", t, total, GradedVector())};
                }
        }
    }
    return {};
}

CheckReport pairing_rank_check(const FockConfig& cfg, const FockConfig& dual_cfg, long degree) {
    auto rows = tuples_of_degree(cfg.factors(), degree);
    auto cols = tuples_of_degree(dual_cfg.factors(), degree);
    if (rows.size() != cols.size()) return {false, "dimension mismatch"};
    // Gram matrix of the pairing in the tuple basis; with the sign-diagonal
    // pairing this is a (signed) permutation matrix, so check bijectivity.
    size_t n = rows.size();
    std::vector<bool> hit(n, false);
    for (size_t i = 0; i < n; ++i) {
        size_t matches = 0, last = 0;
        for (size_t j = 0; j < n; ++j) {
            Scalar s = shapovalov(GradedVector::basis(rows[i]), GradedVector::basis(cols[j]));
            if (!s.is_zero()) {
                ++matches;
                last = j;
            }
        }
        if (matches != 1 || hit[last]) return {false, "pairing degenerate at degree " +
                                                          std::to_string(degree)};
        hit[last] = true;
    }
    return {};
}

} // namespace qdiff
