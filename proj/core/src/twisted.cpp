#include "qdiff/twisted.hpp"

#include <sstream>

namespace qdiff {

TwistParams twist_from_sigma(long mp, long m, long np, long n, const Scalar& u,
                             const Tower& tower) {
    if (mp * n - m * np != 1) throw error("twist_from_sigma: matrix must have determinant 1");
    if (n <= 0) throw error("twist_from_sigma: need n > 0");
    return TwistParams{n, np, u, tower};
}

namespace {

// mod in [0, n)
long mod_n(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

Rat lattice_norm(const std::vector<long>& m, long n) {
    Rat acc(0);
    for (long i = 0; i < n; ++i) {
        Rat a = Rat(m[i]) + Rat(i, n);
        acc += a * a - Rat(i * i, n * n);
    }
    return acc / 2;
}

BosonAlgebra n_boson_algebra(long n) {
    BosonAlgebra alg;
    alg.colors.assign(n, BosonColor{Rat(1), all_modes(), Rat(1), Rat(1)});
    alg.lattice_rank = n;
    alg.lattice_degree = [n](const std::vector<long>& m) { return lattice_norm(m, n); };
    return alg;
}

// Bosonized fermion halves (Klein factor on the colors above the moved one).
VertexOperator psi_half(long n, long color, const Scalar& carg) {
    VertexOperator v;
    Scalar cinv = carg.inverse();
    v.creation.push_back({color, Rat(-1), cinv, all_modes()});
    v.annihilation.push_back({color, Rat(-1), cinv, all_modes()});
    v.zm.shift.assign(n, 0);
    v.zm.base_coeff.assign(n, Scalar(1L));
    v.zm.base_zexp.assign(n, Rat(0));
    v.zm.shift[color] = -1;
    v.zm.base_coeff[color] = cinv;
    v.zm.base_zexp[color] = Rat(-1);
    for (long k = color + 1; k < n; ++k) v.zm.base_coeff[k] = -v.zm.base_coeff[k];
    return v;
}

VertexOperator psi_star_half(long n, long color, const Scalar& carg) {
    VertexOperator v;
    v.creation.push_back({color, Rat(1), carg.inverse(), all_modes()});
    v.annihilation.push_back({color, Rat(1), carg.inverse(), all_modes()});
    v.zm.shift.assign(n, 0);
    v.zm.base_coeff.assign(n, Scalar(1L));
    v.zm.base_zexp.assign(n, Rat(0));
    v.zm.shift[color] = 1;
    v.zm.base_coeff[color] = carg;
    v.zm.base_zexp[color] = Rat(1);
    for (long k = color + 1; k < n; ++k) v.zm.base_coeff[k] = -v.zm.base_coeff[k];
    return v;
}

CurrentSum boson_current(const TwistParams& p, const BosonAlgebra& alg, int sign) {
    const Tower& tw = p.tower;
    long n = p.n;
    CurrentSum total;
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            if (mod_n(b - a + sign * p.n_tw, n) != 0) continue;
            Scalar pref;
            Rat zpow;
            VertexOperator left, right;
            Scalar declared;
            if (sign > 0) {
                pref = p.u_root(1) * tw.q(Rat(-1, 2) + Rat(a + b, 2 * n));
                zpow = Rat(1) + Rat(p.n_tw - a + b, n);
                left = psi_half(n, a, tw.q(Rat(-1, 2)));
                right = psi_star_half(n, b, tw.q(Rat(1, 2)));
                declared = tw.q(Rat(-1));
            } else {
                pref = p.u_root(-1) * tw.q(Rat(1, 2) - Rat(a + b, 2 * n));
                zpow = Rat(1) + Rat(-p.n_tw - a + b, n);
                left = psi_half(n, a, tw.q(Rat(1, 2)));
                right = psi_star_half(n, b, tw.q(Rat(-1, 2)));
                declared = tw.q(Rat(1));
            }
            CurrentSum prod =
                regular_product({left}, {right}, Scalar(1L), {declared}, alg);
            for (auto& v : prod) {
                v.coeff *= pref;
                v.z_power += zpow;
                total.push_back(std::move(v));
            }
        }
    }
    return total;
}

} // namespace

BosonRealization::BosonRealization(TwistParams p, Rat cap)
    : p_(std::move(p)), cap_(std::move(cap)), alg_(n_boson_algebra(p_.n)) {
    if (p_.tower.L % (2 * p_.n) != 0)
        throw error("BosonRealization: tower L must be a multiple of 2n");
    ecur_ = boson_current(p_, alg_, +1);
    fcur_ = boson_current(p_, alg_, -1);
}

CurrentSum BosonRealization::displayed_current(const TwistParams& p, int sign) {
    const Tower& tw = p.tower;
    long n = p.n;
    CurrentSum total;
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            if (mod_n(b - a + sign * p.n_tw, n) != 0) continue;
            if (a == b) throw error("displayed_current: diagonal terms need n_tw != 0 mod n");
            VertexOperator v;
            if (sign > 0) {
                v.coeff = p.u_root(1) * tw.q(Rat(a + b - n, 2 * n));
                v.z_power = Rat(p.n_tw - a + b, n) + 1;
                v.creation.push_back({b, Rat(1), tw.q(Rat(-1, 2)), all_modes()});
                v.creation.push_back({a, Rat(-1), tw.q(Rat(1, 2)), all_modes()});
            } else {
                v.coeff = p.u_root(-1) * tw.q(Rat(-a - b + n, 2 * n));
                v.z_power = Rat(-p.n_tw - a + b, n) + 1;
                v.creation.push_back({b, Rat(1), tw.q(Rat(1, 2)), all_modes()});
                v.creation.push_back({a, Rat(-1), tw.q(Rat(-1, 2)), all_modes()});
            }
            v.annihilation = v.creation;
            v.zm.shift.assign(n, 0);
            v.zm.base_coeff.assign(n, Scalar(1L));
            v.zm.base_zexp.assign(n, Rat(0));
            v.zm.shift[b] += 1;
            v.zm.shift[a] -= 1;
            // (q^{+-1/2} z)^{a_b[0]} (q^{-+1/2} z)^{-a_a[0]}
            Scalar qb = sign > 0 ? tw.q(Rat(1, 2)) : tw.q(Rat(-1, 2));
            v.zm.base_coeff[b] = v.zm.base_coeff[b] * qb;
            v.zm.base_zexp[b] += 1;
            v.zm.base_coeff[a] = v.zm.base_coeff[a] * qb; // (q^{-s} z)^{-1} has coeff q^{s}
            v.zm.base_zexp[a] += -1;
            // epsilon_{a,b}: (-1)^{a_r[0]} for r between the colors
            long lo = std::min(a, b), hi = std::max(a, b);
            for (long r = lo; r < hi; ++r) v.zm.base_coeff[r] = -v.zm.base_coeff[r];
            total.push_back(std::move(v));
        }
    }
    return total;
}

BosonVector BosonRealization::e_basis(long r, const State& s) const {
    return apply_mode(ecur_, Rat(r), Vec::basis(s), alg_, cap_);
}
BosonVector BosonRealization::f_basis(long r, const State& s) const {
    return apply_mode(fcur_, Rat(r), Vec::basis(s), alg_, cap_);
}
BosonVector BosonRealization::h_basis(long k, const State& s) const {
    if (k == 0) throw error("h: zero mode excluded");
    BosonVector acc;
    Vec v = Vec::basis(s);
    for (long b = 0; b < p_.n; ++b) {
        if (k < 0)
            acc = acc + apply_creator(b, -k, v, alg_, cap_);
        else
            acc = acc + apply_annihilator(b, k, v, alg_);
    }
    return acc;
}
BosonVector BosonRealization::cached(int which, long r, const Vec& v) const {
    auto& cache = which == 0 ? ecache_ : which == 1 ? fcache_ : hcache_;
    Vec out;
    for (const auto& [s, c] : v.terms()) {
        auto key = std::make_pair(r, s);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Vec img = which == 0 ? e_basis(r, s) : which == 1 ? f_basis(r, s) : h_basis(r, s);
            it = cache.emplace(key, std::move(img)).first;
        }
        out.add_scaled(it->second, c);
    }
    return out;
}
BosonVector BosonRealization::e(long r, const Vec& v) const { return cached(0, r, v); }
BosonVector BosonRealization::f(long r, const Vec& v) const { return cached(1, r, v); }
BosonVector BosonRealization::h(long k, const Vec& v) const { return cached(2, k, v); }

std::vector<BosonState> BosonRealization::states(const Rat& max_degree) const {
    std::vector<std::vector<long>> weights;
    for (const auto& l : enumerate_lattice(p_.n, max_degree)) weights.push_back(l.components());
    return boson_states_up_to(alg_, max_degree, weights);
}

// ---- strange bosonization ----

namespace {
BosonAlgebra strange_algebra(long n) {
    BosonAlgebra alg;
    alg.colors.assign(1, BosonColor{Rat(1), all_modes(), Rat(1, n), Rat(1, n)});
    alg.lattice_rank = 0;
    return alg;
}

CurrentSum strange_current(const TwistParams& p, int sign) {
    const Tower& tw = p.tower;
    long n = p.n;
    if (tw.M % n != 0 && n > 1) throw error("strange bosonization: tower M must contain zeta_n");
    CurrentSum total;
    Scalar front = (sign > 0 ? p.u_root(1) : p.u_root(-1)) /
                   (Scalar(n) * (Scalar(1L) - tw.q(Rat(sign, n))));
    for (long l = 0; l < n; ++l) {
        VertexOperator v;
        long zpow = (tw.M / n) * l; // zeta_n^l as a power of zeta_M
        Scalar zl = n == 1 ? Scalar(1L) : Scalar(Cyclo::zeta(tw.M, zpow * (sign > 0 ? 1 : -1) * p.n_tw));
        v.coeff = front * zl;
        v.z_power = Rat(sign * p.n_tw, n);
        Scalar zinv = n == 1 ? Scalar(1L) : Scalar(Cyclo::zeta(tw.M, -zpow));
        v.creation.push_back({0, Rat(1), tw.q(Rat(-sign, 2 * n)) * zinv, all_modes()});
        v.creation.push_back({0, Rat(-1), tw.q(Rat(sign, 2 * n)) * zinv, all_modes()});
        v.annihilation = v.creation;
        total.push_back(std::move(v));
    }
    return total;
}
} // namespace

StrangeRealization::StrangeRealization(TwistParams p, Rat cap)
    : p_(std::move(p)), cap_(std::move(cap)), alg_(strange_algebra(p_.n)) {
    if (p_.tower.L % (2 * p_.n) != 0)
        throw error("StrangeRealization: tower L must be a multiple of 2n");
    ecur_ = strange_current(p_, +1);
    fcur_ = strange_current(p_, -1);
}

BosonVector StrangeRealization::e_basis(long r, const State& s) const {
    return apply_mode(ecur_, Rat(r), Vec::basis(s), alg_, cap_);
}
BosonVector StrangeRealization::f_basis(long r, const State& s) const {
    return apply_mode(fcur_, Rat(r), Vec::basis(s), alg_, cap_);
}
BosonVector StrangeRealization::h_basis(long k, const State& s) const {
    if (k == 0) throw error("h: zero mode excluded");
    long mode = p_.n * k;
    Vec v = Vec::basis(s);
    if (mode < 0) return apply_creator(0, -mode, v, alg_, cap_);
    return apply_annihilator(0, mode, v, alg_);
}
BosonVector StrangeRealization::cached(int which, long r, const Vec& v) const {
    auto& cache = which == 0 ? ecache_ : which == 1 ? fcache_ : hcache_;
    Vec out;
    for (const auto& [s, c] : v.terms()) {
        auto key = std::make_pair(r, s);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Vec img = which == 0 ? e_basis(r, s) : which == 1 ? f_basis(r, s) : h_basis(r, s);
            it = cache.emplace(key, std::move(img)).first;
        }
        out.add_scaled(it->second, c);
    }
    return out;
}
BosonVector StrangeRealization::e(long r, const Vec& v) const { return cached(0, r, v); }
BosonVector StrangeRealization::f(long r, const Vec& v) const { return cached(1, r, v); }

CheckReport StrangeRealization::residue_check(const Rat& max_degree, long mode_margin) const {
    StrangeRealization big(p_, max_degree + Rat(mode_margin + 2));
    for (const auto& s : big.states(max_degree)) {
        auto v = basis(s);
        for (long r = -mode_margin; r <= mode_margin; ++r) {
            try {
                (void)apply_mode_checked(big.ecur_, Rat(r), v, big.alg_, big.cap_, {Rat(0)});
                (void)apply_mode_checked(big.fcur_, Rat(r), v, big.alg_, big.cap_, {Rat(0)});
            } catch (const error& err) {
                return {false, err.what()};
            }
        }
    }
    return {};
}
BosonVector StrangeRealization::h(long k, const Vec& v) const { return cached(2, k, v); }

std::vector<BosonState> StrangeRealization::states(const Rat& max_degree) const {
    return boson_states_up_to(alg_, max_degree, {});
}

// ---- fermionic realization ----

FermionRealization::FermionRealization(TwistParams p, Rat cap)
    : p_(std::move(p)), cap_(std::move(cap)) {
    box_cap_ = to_long(rat_floor(cap_ * p_.n));
}

std::vector<MayaDiagram> FermionRealization::states(const Rat& max_degree) const {
    std::vector<MayaDiagram> out;
    long boxes = to_long(rat_floor(max_degree * p_.n));
    for (long d = 0; d <= boxes; ++d)
        for (const auto& la : partitions_of(d)) out.emplace_back(la, 0);
    return out;
}

FermionVector FermionRealization::bilinear(int sign, long r, const Vec& v) const {
    const Tower& tw = p_.tower;
    long n = p_.n;
    FermionVector out;
    long margin = box_cap_ + 2 * n + 2;
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            if (mod_n(b - a + sign * p_.n_tw, n) != 0) continue;
            long g = (sign * p_.n_tw - a + b) / n;
            bool diagonal = (a == b);
            // i + j = r + g; psi_(a)[i] creates at n i + a, psi*_(b)[j]
            // annihilates at b - n j
            for (long i = -(margin + n) / n - 1; n * i + a <= margin; ++i) {
                long j = r + g - i;
                long create_pos = n * i + a;
                long annih_pos = b - n * j;
                if (create_pos < -margin) continue;
                if (annih_pos > margin || annih_pos < -margin) continue;
                Scalar coef;
                if (sign > 0)
                    coef = p_.u_root(1) * tw.q(Rat(a + b, 2 * n) + Rat(i - j, 2));
                else
                    coef = p_.u_root(-1) * tw.q(-Rat(a + b, 2 * n) + Rat(j - i, 2));
                FermionVector piece;
                if (!diagonal) {
                    piece = create_at(create_pos, annihilate_at(annih_pos, v));
                } else {
                    // normal ordering (charge-0 aligned): minus psi* psi when
                    // the big creation index is in the annihilating half
                    if (create_pos < 0) {
                        piece = create_at(create_pos, annihilate_at(annih_pos, v));
                    } else {
                        piece = annihilate_at(annih_pos, create_at(create_pos, v)).scaled(Scalar(-1L));
                    }
                }
                out = out + piece.scaled(coef);
            }
            if (diagonal && r == 0) {
                // vacuum constant of the contracted bilinear
                Scalar cst = (sign > 0 ? p_.u_root(1) * tw.q(Rat(2 * a, 2 * n)) /
                                             (Scalar(1L) - tw.q(Rat(1)))
                                       : p_.u_root(-1) * tw.q(-Rat(2 * a, 2 * n)) /
                                             (Scalar(1L) - tw.q(Rat(-1))));
                out = out + v.scaled(cst);
            }
        }
    }
    // truncate
    FermionVector trunc;
    for (const auto& [m, c] : out.terms())
        if (m.to_partition().size() <= box_cap_) trunc.add_term(m, c);
    return trunc;
}

FermionVector FermionRealization::cached(int which, long r, const Vec& v) const {
    auto& cache = which == 0 ? ecache_ : which == 1 ? fcache_ : hcache_;
    Vec out;
    for (const auto& [s, c] : v.terms()) {
        auto key = std::make_pair(r, s);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Vec img = which == 0 ? bilinear(+1, r, Vec::basis(s))
                                 : which == 1 ? bilinear(-1, r, Vec::basis(s))
                                              : h_direct(r, Vec::basis(s));
            it = cache.emplace(key, std::move(img)).first;
        }
        out.add_scaled(it->second, c);
    }
    return out;
}
FermionVector FermionRealization::e(long r, const Vec& v) const { return cached(0, r, v); }
FermionVector FermionRealization::f(long r, const Vec& v) const { return cached(1, r, v); }
FermionVector FermionRealization::h(long k, const Vec& v) const { return cached(2, k, v); }

FermionVector FermionRealization::h_direct(long k, const Vec& v) const {
    if (k == 0) throw error("h: zero mode excluded");
    long n = p_.n;
    long margin = box_cap_ + 2 * n + 2;
    FermionVector out;
    // sum_a sum_{i+j=k} psi_(a)[i] psi*_(a)[j]: moves one particle down by nk
    for (long a = 0; a < n; ++a) {
        for (long i = -(margin + n) / n - 1; n * i + a <= margin; ++i) {
            long j = k - i;
            long create_pos = n * i + a;
            long annih_pos = a - n * j;
            if (create_pos < -margin || annih_pos > margin || annih_pos < -margin) continue;
            out = out + create_at(create_pos, annihilate_at(annih_pos, v));
        }
    }
    FermionVector trunc;
    for (const auto& [m, c] : out.terms())
        if (m.to_partition().size() <= box_cap_) trunc.add_term(m, c);
    return trunc;
}

// ---- restriction realization ----

RestrictionRealization::RestrictionRealization(TwistParams p, Rat cap)
    : p_(std::move(p)), cap_(std::move(cap)) {
    cfg_.tower = p_.tower;
    cfg_.qscale = Rat(1, p_.n);
    cfg_.u = {p_.u_root(1)};
    cfg_.degree_cap = to_long(rat_floor(cap_ * p_.n));
}

GradedVector RestrictionRealization::cached(int which, long r, const Vec& v) const {
    auto& cache = which == 0 ? ecache_ : which == 1 ? fcache_ : hcache_;
    Vec out;
    for (const auto& [t, c] : v.terms()) {
        auto key = std::make_pair(r, t[0]);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Vec img;
            if (which == 0)
                img = act_E(1, p_.n * r + p_.n_tw, Vec::basis({t[0]}), cfg_);
            else if (which == 1)
                img = act_E(-1, p_.n * r - p_.n_tw, Vec::basis({t[0]}), cfg_);
            else
                img = act_E(0, p_.n * r, Vec::basis({t[0]}), cfg_);
            it = cache.emplace(key, std::move(img)).first;
        }
        out.add_scaled(it->second, c);
    }
    return out;
}
GradedVector RestrictionRealization::e(long r, const Vec& v) const { return cached(0, r, v); }
GradedVector RestrictionRealization::f(long r, const Vec& v) const { return cached(1, r, v); }
GradedVector RestrictionRealization::h(long k, const Vec& v) const {
    if (k == 0) throw error("h: zero mode excluded");
    return cached(2, k, v);
}

std::vector<Partition> RestrictionRealization::states(const Rat& max_degree) const {
    std::vector<Partition> out;
    long boxes = to_long(rat_floor(max_degree * p_.n));
    for (long d = 0; d <= boxes; ++d)
        for (const auto& la : partitions_of(d)) out.push_back(la);
    return out;
}

// ---- decomposition checks ----

std::pair<LatticePoint, GradedVector> quotient_encode(const Partition& lambda, long n) {
    auto cq = core_quotient(lambda, n);
    int sign = quotient_shuffle_sign(lambda, n);
    GradedVector v = GradedVector::basis(cq.quotients, Scalar(sign));
    return {cq.charges, v};
}

DecompositionReport decomposition_character_check(long n, long n_tw, long micro_max) {
    DecompositionReport rep;
    long d = n_tw == 0 ? n : std::gcd(n, n_tw);
    // LHS: partitions by box count
    rep.lhs_character.assign(micro_max + 1, 0);
    {
        std::vector<long> p(micro_max + 1, 0);
        p[0] = 1;
        for (long k = 1; k <= micro_max; ++k)
            for (long m = k; m <= micro_max; ++m) p[m] += p[m - k];
        rep.lhs_character = p;
    }
    // RHS: sum over Q_(d) sectors of shifted product characters
    std::vector<long> rhs(micro_max + 1, 0);
    std::vector<long> pd(micro_max + 1, 0); // factor states by ambient micro d*m
    {
        std::vector<long> p(micro_max + 1, 0);
        p[0] = 1;
        for (long k = 1; k <= micro_max; ++k)
            for (long m = k; m <= micro_max; ++m) p[m] += p[m - k];
        for (long m = 0; d * m <= micro_max; ++m) pd[d * m] = p[m];
    }
    // product of d factor characters
    std::vector<long> prod(micro_max + 1, 0);
    prod[0] = 1;
    for (long f = 0; f < d; ++f) {
        std::vector<long> next(micro_max + 1, 0);
        for (long x = 0; x <= micro_max; ++x) {
            if (prod[x] == 0) continue;
            for (long y = 0; x + y <= micro_max; ++y) next[x + y] += prod[x] * pd[y];
        }
        prod = std::move(next);
    }
    // sector offsets: minimal ambient micro degree over weights with class sums l
    auto sector_offset = [&](const LatticePoint& l) -> long {
        long box = 0;
        for (long a = 0; a < d; ++a) box = std::max(box, std::labs(l[a]));
        box += 2;
        long per_class = n / d;
        std::vector<long> m(n, 0);
        Rat best(-1);
        auto rec = [&](auto&& self, long cls, long idx, long remaining) -> void {
            if (cls == d) {
                Rat nn = lattice_norm(m, n) * n;
                if (best < 0 || nn < best) best = nn;
                return;
            }
            long pos = cls + idx * d;
            if (idx == per_class - 1) {
                if (std::labs(remaining) <= box + 2) {
                    m[pos] = remaining;
                    self(self, cls + 1, 0, cls + 1 < d ? l[cls + 1] : 0);
                }
                return;
            }
            for (long x = -box; x <= box; ++x) {
                m[pos] = x;
                self(self, cls, idx + 1, remaining - x);
            }
        };
        rec(rec, 0, 0, l[0]);
        if (!is_integer(best)) throw error("sector offset not integral");
        return to_long(best);
    };
    // enumerate sectors with offset within range
    for (const auto& l : enumerate_lattice(d, Rat(micro_max + d))) {
        long off = sector_offset(l);
        if (off > micro_max) continue;
        for (long x = 0; x + off <= micro_max; ++x) rhs[x + off] += prod[x];
    }
    rep.rhs_character = rhs;
    rep.pass = rep.lhs_character == rep.rhs_character;
    if (!rep.pass) rep.detail = "character mismatch";
    return rep;
}

CheckReport decomposition_equivariance_check(long n, long box_window, const Tower& tower) {
    FockConfig ambient;
    ambient.tower = tower;
    ambient.qscale = Rat(1, n);
    ambient.u = {Scalar::v_pow(1)};
    ambient.degree_cap = box_window + 2 * n;

    std::vector<std::pair<long, long>> ops = {{0, 1}, {0, -1}, {1, 0}, {1, 1},
                                              {1, -1}, {-1, 1}, {-1, -1}};
    for (long dgr = 0; dgr <= box_window; ++dgr) {
        for (const auto& la : partitions_of(dgr)) {
            auto [l, enc] = quotient_encode(la, n);
            // factor module config for this sector
            FockConfig sector;
            sector.tower = tower;
            sector.u.resize(n);
            for (long a = 0; a < n; ++a)
                sector.u[a] = Scalar::v_pow(1) * tower.q(Rat(a, n) + Rat(l[a]));
            sector.degree_cap = (box_window + 2 * n) / n + 2;
            for (auto [a, b] : ops) {
                GradedVector fine = act_E(a, n * b, GradedVector::basis({la}), ambient);
                // re-encode the image and compare with the tensor action
                GradedVector image;
                for (const auto& [t, c] : fine.terms()) {
                    auto [l2, enc2] = quotient_encode(t[0], n);
                    if (!(l2 == l)) return {false, "sector not preserved"};
                    image = image + enc2.scaled(c);
                }
                GradedVector tensor = act_E(a, b, enc, sector);
                if (!(image == tensor))
                    return {false, "equivariance fails at " + la.str() + " op (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")"};
            }
        }
    }
    return {};
}

} // namespace qdiff
