#include "qdiff/whittaker.hpp"
#include "qdiff/fermion.hpp"
#include "qdiff/linalg.hpp"

#include <sstream>

namespace qdiff {

// ---- linalg ----

bool RowReducer::add_row(std::vector<Scalar> a, Scalar b) {
    if (a.size() != cols_) throw error("RowReducer: column mismatch");
    for (const auto& row : rows_) {
        const Scalar& lead = a[row.pivot];
        if (lead.is_zero()) continue;
        Scalar f = lead / row.a[row.pivot];
        for (size_t j = 0; j < cols_; ++j) {
            if (!row.a[j].is_zero()) a[j] -= f * row.a[j];
        }
        b -= f * row.b;
    }
    // pick the simplest nonzero entry as pivot
    size_t pivot = cols_;
    size_t best = 0;
    for (size_t j = 0; j < cols_; ++j) {
        if (a[j].is_zero()) continue;
        size_t sz = a[j].size();
        if (pivot == cols_ || sz < best) {
            pivot = j;
            best = sz;
        }
    }
    if (pivot == cols_) {
        if (!b.is_zero()) throw error("RowReducer: inconsistent system (0 = nonzero)");
        return false;
    }
    for (auto& x : a) x.reduce();
    b.reduce();
    rows_.push_back({std::move(a), std::move(b), pivot});
    return true;
}

std::vector<Scalar> RowReducer::solve() const {
    if (!determined()) throw error("RowReducer::solve: system underdetermined");
    // back substitution in reverse insertion order
    std::vector<Scalar> x(cols_);
    std::vector<bool> known(cols_, false);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        Scalar acc = it->b;
        for (size_t j = 0; j < cols_; ++j) {
            if (j == it->pivot || it->a[j].is_zero()) continue;
            if (!known[j]) throw error("RowReducer::solve: internal order violation");
            acc -= it->a[j] * x[j];
        }
        x[it->pivot] = acc / it->a[it->pivot];
        x[it->pivot].reduce();
        known[it->pivot] = true;
    }
    return x;
}

// ---- fermion word calculus ----

FermionVector FermionVector::basis(const MayaDiagram& m, const Scalar& c) {
    FermionVector v;
    if (!c.is_zero()) v.terms_[m] = c;
    return v;
}

Scalar FermionVector::coeff(const MayaDiagram& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void FermionVector::add_term(const MayaDiagram& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FermionVector::add_scaled(const FermionVector& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [m, x] : v.terms_) add_term(m, x * c);
}

FermionVector FermionVector::scaled(const Scalar& c) const {
    FermionVector r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

FermionVector operator+(const FermionVector& a, const FermionVector& b) {
    FermionVector r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

FermionVector operator-(const FermionVector& a, const FermionVector& b) {
    FermionVector r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

std::string FermionVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
}

FermionVector create_at(long p, const FermionVector& v) {
    FermionVector r;
    for (const auto& [m, c] : v.terms()) {
        if (m.occupied(p)) continue;
        Scalar s = c;
        if (m.count_occupied_below(p) % 2) s = -s;
        r.add_term(m.with_created(p), s);
    }
    return r;
}

FermionVector annihilate_at(long p, const FermionVector& v) {
    FermionVector r;
    for (const auto& [m, c] : v.terms()) {
        if (!m.occupied(p)) continue;
        Scalar s = c;
        if (m.count_occupied_below(p) % 2) s = -s;
        r.add_term(m.with_removed(p), s);
    }
    return r;
}

namespace {

// Canonical word of a Maya state relative to its aligned vacuum: creations at
// the added positions (increasing), then annihilations at the removed
// positions (increasing). Returns the sign such that applying the word to
// the vacuum yields sign * |state>.
struct Word {
    std::vector<long> created;  // increasing
    std::vector<long> removed;  // increasing
};

Word canonical_word(const MayaDiagram& m) {
    Word w;
    long lo = std::min(m.lo(), 0L);
    long hi = std::max(m.hi(), 0L);
    for (long p = lo; p < hi; ++p) {
        bool vac = p >= 0;
        bool occ = m.occupied(p);
        if (occ && !vac) w.created.push_back(p);
        if (!occ && vac) w.removed.push_back(p);
    }
    return w;
}

int apply_word_sign(const Word& w, const MayaDiagram& vacuum) {
    FermionVector v = FermionVector::basis(vacuum);
    for (auto it = w.removed.rbegin(); it != w.removed.rend(); ++it) v = annihilate_at(*it, v);
    for (auto it = w.created.rbegin(); it != w.created.rend(); ++it) v = create_at(*it, v);
    if (v.terms().size() != 1) throw error("apply_word_sign: word did not act freely");
    const Scalar& c = v.terms().begin()->second;
    if (c == Scalar(1L)) return 1;
    if (c == Scalar(-1L)) return -1;
    throw error("apply_word_sign: non-unit result");
}

} // namespace

int quotient_shuffle_sign(const Partition& lambda, long n) {
    MayaDiagram big(lambda, 0);
    auto subs = maya_split(big, n);
    // colored canonical words and their signs in the colored Maya spaces
    int colored_sign = 1;
    std::vector<Word> words(n);
    for (long r = 0; r < n; ++r) {
        words[r] = canonical_word(subs[r]);
        colored_sign *= apply_word_sign(words[r], MayaDiagram(Partition(), 0));
    }
    // concatenated word in the big space, color 0 leftmost; translate
    // colored position p' of color r to n p' + r. Annihilations of color r
    // execute before creations of color r, and colors execute right to left.
    FermionVector v = FermionVector::basis(MayaDiagram(Partition(), 0));
    for (long r = n - 1; r >= 0; --r) {
        for (auto it = words[r].removed.rbegin(); it != words[r].removed.rend(); ++it)
            v = annihilate_at(n * *it + r, v);
        for (auto it = words[r].created.rbegin(); it != words[r].created.rend(); ++it)
            v = create_at(n * *it + r, v);
    }
    if (v.terms().size() != 1) throw error("quotient_shuffle_sign: degenerate word");
    if (!(v.terms().begin()->first == big)) throw error("quotient_shuffle_sign: state mismatch");
    const Scalar& c = v.terms().begin()->second;
    int big_sign = c == Scalar(1L) ? 1 : -1;
    return big_sign * colored_sign;
}

// ---- Whittaker vectors ----

WhittakerVector whittaker_single(const Scalar& u, long D, const Tower& tower, const Rat& qscale) {
    FockConfig cfg{tower, {u}, D};
    WhittakerVector w{cfg, {}};
    w.comp.resize(D + 1);
    for (long d = 0; d <= D; ++d) {
        for (const auto& p : partitions_of(d)) {
            Scalar denom(1L);
            for (const auto& box : hooks_contents(p)) denom *= tower.sinh_q(qscale * box.hook);
            Scalar c = tower.q(-qscale * Rat(p.content_sum()) / 2) / denom;
            w.comp[d].add_term({p}, c);
        }
    }
    return w;
}

namespace {

// eigenvalue of E_{Nk,k}: ((-q^{-1/2})^N u_1...u_N)^k / (q^{-k/2} - q^{k/2})
Scalar diagonal_eigenvalue(const FockConfig& cfg, long k) {
    Scalar prod = cfg.q(Rat(-cfg.factors(), 2));
    if (cfg.factors() % 2) prod = -prod;
    for (const auto& ui : cfg.u) prod *= ui;
    return prod.pow(k) / (cfg.q(Rat(-k, 2)) - cfg.q(Rat(k, 2)));
}

} // namespace

WhittakerVector whittaker_solve(const FockConfig& cfg0, long D) {
    FockConfig cfg = cfg0.with_cap(D);
    cfg.check_irreducible();
    long N = cfg.factors();
    WhittakerVector w{cfg, {}};
    w.comp.resize(D + 1);
    w.comp[0] = GradedVector::vacuum(N);
    for (long d = 1; d <= D; ++d) {
        auto unknowns = tuples_of_degree(N, d);
        size_t dim = unknowns.size();
        RowReducer reducer(dim);

        auto add_condition = [&](long a, long b, const GradedVector& rhs_vec) {
            // rows indexed by target tuples of degree d-b
            std::vector<GradedVector> images(dim);
            for (size_t j = 0; j < dim; ++j)
                images[j] = act_E(a, b, GradedVector::basis(unknowns[j]), cfg);
            for (const auto& target : tuples_of_degree(N, d - b)) {
                std::vector<Scalar> row(dim);
                bool any = false;
                for (size_t j = 0; j < dim; ++j) {
                    row[j] = images[j].coeff(target);
                    any = any || !row[j].is_zero();
                }
                Scalar rhs = rhs_vec.coeff(target);
                if (!any && rhs.is_zero()) continue;
                reducer.add_row(std::move(row), std::move(rhs));
            }
        };

        // (i) H_k w_d = (q^{k/2} - q^{-k/2})^{-1} w_{d-k}
        for (long k = 1; k <= d && !reducer.determined(); ++k) {
            Scalar c = (cfg.q(Rat(k, 2)) - cfg.q(Rat(-k, 2))).inverse();
            add_condition(0, k, w.comp[d - k].scaled(c));
        }
        // (iii) E_{Nk,k} eigen-conditions
        for (long k = 1; k <= d && !reducer.determined(); ++k)
            add_condition(N * k, k, w.comp[d - k].scaled(diagonal_eigenvalue(cfg, k)));
        // (ii) annihilation conditions in increasing (k2, k1)
        for (long k2 = 1; k2 <= d && !reducer.determined(); ++k2)
            for (long k1 = 1; k1 < N * k2 && !reducer.determined(); ++k1)
                add_condition(k1, k2, GradedVector());
        if (!reducer.determined())
            throw error("whittaker_solve: conditions do not determine degree " +
                        std::to_string(d) + " (rank " + std::to_string(reducer.rank()) + " of " +
                        std::to_string(dim) + ")");
        auto x = reducer.solve();
        for (size_t j = 0; j < dim; ++j) w.comp[d].add_term(unknowns[j], x[j]);
    }
    return w;
}

CheckReport whittaker_condition_check(const WhittakerVector& w) {
    const FockConfig& cfg = w.cfg;
    long N = cfg.factors();
    long D = w.degree();
    auto fail = [&](const std::string& what, long d) -> CheckReport {
        return {false, "whittaker condition " + what + " fails at degree " + std::to_string(d)};
    };
    for (long d = 0; d <= D; ++d) {
        for (long k = 1; k <= d; ++k) {
            Scalar c = (cfg.q(Rat(k, 2)) - cfg.q(Rat(-k, 2))).inverse();
            if (!(act_E(0, k, w.comp[d], cfg) == w.comp[d - k].scaled(c))) return fail("H", d);
            if (!(act_E(N * k, k, w.comp[d], cfg) ==
                  w.comp[d - k].scaled(diagonal_eigenvalue(cfg, k))))
                return fail("E_{Nk,k}", d);
        }
        for (long k2 = 1; k2 <= d; ++k2)
            for (long k1 = 1; k1 < N * k2; ++k1)
                if (!act_E(k1, k2, w.comp[d], cfg).is_zero()) return fail("E_{k1,k2}", d);
    }
    return {};
}

CheckReport whittaker_shifted_check(const WhittakerVector& w, long m) {
    const FockConfig& cfg = w.cfg;
    long N = cfg.factors();
    long D = w.degree();
    // shifted vector I_tau^{N-m} w, degree by degree
    std::vector<GradedVector> s(D + 1);
    for (long d = 0; d <= D; ++d) s[d] = i_tau(w.comp[d], cfg, N - m);
    auto fail = [&](const std::string& what, long d) -> CheckReport {
        return {false, "shifted whittaker condition " + what + " fails at degree " +
                           std::to_string(d)};
    };
    for (long d = 0; d <= D; ++d) {
        for (long k = 1; k <= d; ++k) {
            Scalar c = (cfg.q(Rat(k, 2)) - cfg.q(Rat(-k, 2))).inverse();
            if (!(act_E(-(N - m) * k, k, s[d], cfg) == s[d - k].scaled(c)))
                return fail("E_{-(N-m)k,k}", d);
            if (!(act_E(m * k, k, s[d], cfg) == s[d - k].scaled(diagonal_eigenvalue(cfg, k))))
                return fail("E_{mk,k}", d);
        }
        for (long k2 = 1; k2 <= d; ++k2)
            for (long k1 = -m * k2 + 1; k1 < (N - m) * k2; ++k1)
                if (!act_E(k1, k2, s[d], cfg).is_zero()) return fail("annihilator", d);
    }
    return {};
}

ZSeries pairing_series(const WhittakerVector& left, const WhittakerVector& right, long D) {
    if (left.degree() < D || right.degree() < D)
        throw error("pairing_series: components missing for requested order");
    std::vector<Scalar> c(D + 1);
    for (long d = 0; d <= D; ++d) c[d] = shapovalov(right.comp[d], left.comp[d]);
    return ZSeries(Rat(0), 1, std::move(c));
}

std::vector<DecompositionComponent> whittaker_decompose(long n, long D, const Rat& norm_bound,
                                                        const Tower& tower) {
    if (tower.L % (2 * n) != 0)
        throw error("whittaker_decompose: tower must contain q^{1/(2n)}");
    std::vector<DecompositionComponent> out;
    Rat qs(1, n);
    for (const auto& l : enumerate_lattice(n, norm_bound)) {
        DecompositionComponent dc;
        dc.l = l;
        dc.z_norm = l.norm();
        Partition core = core_of_lattice(l);
        dc.prefactor = tower.q(-qs * Rat(core.content_sum()) / 2) /
                       hook_product_core(l, tower, qs);
        for (long a = 0; a < n; ++a) dc.factor_u.push_back(tower.q(Rat(a, n) + Rat(l[a])));
        FockConfig cfg{tower, dc.factor_u, D};
        dc.component.cfg = cfg;
        dc.component.comp.resize(D + 1);
        // the summand embedding is normalized so the core maps to +vacuum
        int core_sign = quotient_shuffle_sign(core, n);
        Scalar inv_pref = dc.prefactor.inverse();
        if (core_sign < 0) inv_pref = -inv_pref;
        for (long d = 0; d <= D; ++d) {
            for (const auto& tuple : tuples_of_degree(n, d)) {
                Partition lambda = from_core_quotient(l, tuple);
                Scalar denom(1L);
                for (const auto& box : hooks_contents(lambda))
                    denom *= tower.sinh_q(qs * box.hook);
                Scalar c = tower.q(-qs * Rat(lambda.content_sum()) / 2) / denom;
                int sign = quotient_shuffle_sign(lambda, n);
                if (sign < 0) c = -c;
                dc.component.comp[d].add_term(tuple, c * inv_pref);
            }
        }
        out.push_back(std::move(dc));
    }
    return out;
}

} // namespace qdiff
