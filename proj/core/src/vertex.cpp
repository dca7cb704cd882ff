#include "qdiff/vertex.hpp"

#include <sstream>

namespace qdiff {

std::string BosonState::str() const {
    std::ostringstream os;
    os << "|";
    if (modes.empty()) os << "0";
    for (const auto& [ck, m] : modes) {
        os << "a" << ck.first << "[-" << ck.second << "]";
        if (m > 1) os << "^" << m;
    }
    if (!weight.empty()) {
        os << "; e^(";
        for (size_t i = 0; i < weight.size(); ++i) {
            if (i) os << ",";
            os << weight[i];
        }
        os << ")";
    }
    os << ">";
    return os.str();
}

Rat state_degree(const BosonState& s, const BosonAlgebra& alg) {
    Rat d(0);
    for (const auto& [ck, m] : s.modes)
        d += Rat(ck.second) * alg.colors[ck.first].mode_degree * m;
    if (!s.weight.empty() && alg.lattice_degree) d += alg.lattice_degree(s.weight);
    return d;
}

std::vector<BosonState> boson_states_up_to(const BosonAlgebra& alg, const Rat& max_degree,
                                           const std::vector<std::vector<long>>& weights) {
    std::vector<std::vector<long>> ws = weights;
    if (ws.empty()) ws.push_back(std::vector<long>(alg.lattice_rank, 0));
    std::vector<BosonState> out;
    for (const auto& w : ws) {
        BosonState base;
        base.weight = w;
        Rat base_deg = state_degree(base, alg);
        if (base_deg > max_degree) continue;
        std::vector<BosonState> cur{base};
        for (long c = 0; c < alg.color_count(); ++c) {
            const BosonColor& col = alg.colors[c];
            if (col.mode_degree <= 0) throw error("boson_states_up_to: bad mode degree");
            std::vector<BosonState> next;
            for (const auto& s : cur) {
                Rat budget = max_degree - state_degree(s, alg);
                auto rec = [&](auto&& self, long kmin, Rat remaining, BosonState acc) -> void {
                    next.push_back(acc);
                    for (long k = kmin; Rat(k) * col.mode_degree <= remaining; ++k) {
                        if (!col.filter.allows(k)) continue;
                        BosonState s2 = acc;
                        s2.modes[{c, k}] += 1;
                        self(self, k, remaining - Rat(k) * col.mode_degree, std::move(s2));
                    }
                };
                rec(rec, 1, budget, s);
            }
            cur = std::move(next);
        }
        for (auto& s : cur) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BosonVector BosonVector::basis(const BosonState& s, const Scalar& c) {
    BosonVector v;
    if (!c.is_zero()) v.terms_[s] = c;
    return v;
}

Scalar BosonVector::coeff(const BosonState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar() : it->second;
}

void BosonVector::add_term(const BosonState& s, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_[s] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void BosonVector::add_scaled(const BosonVector& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [s, x] : v.terms_) add_term(s, x * c);
}

BosonVector BosonVector::scaled(const Scalar& c) const {
    BosonVector r;
    if (c.is_zero()) return r;
    for (const auto& [s, x] : terms_) r.terms_[s] = x * c;
    return r;
}

BosonVector operator+(const BosonVector& a, const BosonVector& b) {
    BosonVector r = a;
    for (const auto& [s, c] : b.terms_) r.add_term(s, c);
    return r;
}

BosonVector operator-(const BosonVector& a, const BosonVector& b) {
    BosonVector r = a;
    for (const auto& [s, c] : b.terms_) r.add_term(s, -c);
    return r;
}

std::string BosonVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << s.str();
    }
    return os.str();
}

namespace {

ModeFilter intersect(const ModeFilter& a, const ModeFilter& b) {
    auto is_all = [](const ModeFilter& f) {
        return f.modulus == 1 && !f.complement && !f.multiples_only;
    };
    if (is_all(a)) return b;
    if (is_all(b)) return a;
    if (!a.complement && !b.complement) return multiples_of(std::lcm(a.modulus, b.modulus));
    if (a.complement && b.complement) {
        if (a.modulus == b.modulus) return a;
        throw error("mode filter intersection unsupported");
    }
    const ModeFilter& comp = a.complement ? a : b;
    const ModeFilter& mult = a.complement ? b : a;
    if (mult.modulus % comp.modulus == 0) return ModeFilter{0, true, false}; // empty support
    throw error("mode filter intersection unsupported");
}

bool filter_empty(const ModeFilter& f) { return f.modulus == 0; }

bool entry_allows(const BosonAlgebra& alg, const ProfileEntry& e, long k) {
    ModeFilter f = intersect(alg.colors[e.color].filter, e.filter);
    return !filter_empty(f) && f.allows(k);
}

// annihilation coefficient alpha_{c,k} = sum over entries (w/k) rho^k
Scalar annihilation_coeff(const VertexOperator& v, const BosonAlgebra& alg, long color, long k) {
    Scalar acc;
    for (const auto& e : v.annihilation) {
        if (e.color != color || !entry_allows(alg, e, k)) continue;
        acc += Scalar(e.weight / k) * e.ratio.pow(k);
    }
    return acc;
}

// creation coefficient beta_{c,k} = sum over entries -(w/k) rho^{-k}
Scalar creation_coeff(const VertexOperator& v, const BosonAlgebra& alg, long color, long k) {
    Scalar acc;
    for (const auto& e : v.creation) {
        if (e.color != color || !entry_allows(alg, e, k)) continue;
        acc -= Scalar(e.weight / k) * e.ratio.pow(-k);
    }
    return acc;
}

struct WeightedTerm {
    Rat zexp;
    BosonState state;
    Scalar coeff;
};

} // namespace

std::map<Rat, BosonVector> apply_vertex(const VertexOperator& v, const BosonVector& in,
                                        const BosonAlgebra& alg, const Rat& cap,
                                        const Rat* target) {
    std::map<Rat, BosonVector> out;
    for (const auto& [state0, cin] : in.terms()) {
        Scalar c0 = cin * v.coeff;
        Rat z0 = v.z_power;
        BosonState state = state0;
        if (!v.zm.trivial()) {
            if (state.weight.empty()) state.weight.assign(alg.lattice_rank, 0);
            for (size_t b = 0; b < v.zm.shift.size(); ++b) {
                long m = state.weight[b];
                if (m != 0 && !v.zm.base_coeff[b].is_one()) c0 *= v.zm.base_coeff[b].pow(m);
                if (m != 0) z0 += v.zm.base_zexp[b] * m;
            }
            for (size_t b = 0; b < v.zm.shift.size(); ++b) state.weight[b] += v.zm.shift[b];
        }
        if (c0.is_zero()) continue;
        // annihilation exponential: binomial action mode by mode
        std::vector<WeightedTerm> terms{{z0, state, c0}};
        for (const auto& [ck, mult] : state.modes) {
            auto [color, k] = ck;
            Scalar alpha = annihilation_coeff(v, alg, color, k);
            if (alpha.is_zero()) continue;
            Scalar step = alpha * Scalar(Rat(k) * alg.colors[color].scale);
            Rat dz = -Rat(k) * alg.colors[color].zstep;
            std::vector<WeightedTerm> next;
            for (const auto& t : terms) {
                Scalar binom(1L);
                Scalar powacc(1L);
                for (long j = 0; j <= mult; ++j) {
                    if (j > 0) {
                        binom *= Scalar(Rat(mult - j + 1, j));
                        powacc *= step;
                    }
                    WeightedTerm nt = t;
                    nt.coeff = t.coeff * binom * powacc;
                    nt.zexp += dz * j;
                    if (j > 0) {
                        long left = mult - j;
                        if (left == 0)
                            nt.state.modes.erase(ck);
                        else
                            nt.state.modes[ck] = left;
                    }
                    next.push_back(std::move(nt));
                }
            }
            terms = std::move(next);
        }
        // creation exponential, bounded by the degree cap (and by the z-gap
        // to the target exponent when one is requested)
        for (const auto& t : terms) {
            Rat budget = cap - state_degree(t.state, alg);
            if (budget < 0) continue;
            Rat zgap(0);
            if (target) {
                zgap = *target - t.zexp;
                if (zgap < 0) continue;
            }
            std::vector<std::tuple<long, long, Scalar>> gens;
            for (long c = 0; c < alg.color_count(); ++c) {
                const BosonColor& col = alg.colors[c];
                for (long k = 1; Rat(k) * col.mode_degree <= budget; ++k) {
                    if (target && Rat(k) * col.zstep > zgap) break;
                    if (!col.filter.allows(k)) continue;
                    Scalar beta = creation_coeff(v, alg, c, k);
                    if (!beta.is_zero()) gens.emplace_back(c, k, beta);
                }
            }
            auto rec = [&](auto&& self, size_t gi, const WeightedTerm& cur, Rat remaining,
                           long picks) -> void {
                if (target && cur.zexp > *target) return;
                if (gi == gens.size()) {
                    if (!target || cur.zexp == *target) out[cur.zexp].add_term(cur.state, cur.coeff);
                    return;
                }
                const auto& [c, k, beta] = gens[gi];
                self(self, gi + 1, cur, remaining, 0);
                Rat cost = Rat(k) * alg.colors[c].mode_degree;
                if (cost <= remaining &&
                    (!target || cur.zexp + Rat(k) * alg.colors[c].zstep <= *target)) {
                    WeightedTerm nt = cur;
                    nt.state.modes[{c, k}]++;
                    // exp expansion: beta^j / j! per generator
                    nt.coeff = cur.coeff * beta / Scalar(Rat(picks + 1));
                    nt.zexp += Rat(k) * alg.colors[c].zstep;
                    self(self, gi, nt, remaining - cost, picks + 1);
                }
            };
            rec(rec, 0, t, budget, 0);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

BosonVector apply_mode(const CurrentSum& cs, const Rat& r, const BosonVector& in,
                       const BosonAlgebra& alg, const Rat& cap) {
    BosonVector acc;
    Rat target = -r;
    for (const auto& v : cs) {
        auto m = apply_vertex(v, in, alg, cap, &target);
        auto it = m.find(target);
        if (it != m.end()) acc = acc + it->second;
    }
    return acc;
}

BosonVector apply_mode_checked(const CurrentSum& cs, const Rat& r, const BosonVector& in,
                               const BosonAlgebra& alg, const Rat& cap,
                               const std::vector<Rat>& allowed_mode_residues) {
    std::map<Rat, BosonVector> total;
    for (const auto& v : cs) {
        for (auto& [e, vec] : apply_vertex(v, in, alg, cap)) {
            auto it = total.find(e);
            if (it == total.end())
                total[e] = vec;
            else
                it->second = it->second + vec;
        }
    }
    for (auto& [e, vec] : total) {
        if (vec.is_zero()) continue;
        Rat mode = -e;
        bool ok = false;
        for (const auto& res : allowed_mode_residues) {
            if (is_integer(mode - res)) {
                ok = true;
                break;
            }
        }
        if (!ok)
            throw error("apply_mode_checked: residue survives at fractional mode " +
                        mode.get_str());
    }
    auto it = total.find(-r);
    return it == total.end() ? BosonVector() : it->second;
}

namespace {

struct Factor {
    Scalar base;   // value of the geometric base at the evaluation point
    Rat exponent;
    Rat xpow;      // base(x) = base * (x/a)^{xpow}: locates the poles
};

void add_factor(std::vector<Factor>& fs, const Scalar& base, const Rat& e, const Rat& xpow) {
    if (e == 0 || base.is_zero()) return;
    for (auto& f : fs) {
        if (f.base == base && f.xpow == xpow) {
            f.exponent += e;
            return;
        }
    }
    fs.push_back({base, e, xpow});
}

void merge_entry(std::vector<ProfileEntry>& list, const ProfileEntry& e) {
    if (e.weight == 0) return;
    for (auto& x : list) {
        if (x.color == e.color && x.ratio == e.ratio && x.filter.modulus == e.filter.modulus &&
            x.filter.complement == e.filter.complement &&
            x.filter.multiples_only == e.filter.multiples_only) {
            x.weight += e.weight;
            return;
        }
    }
    list.push_back(e);
}

void merge_entries_rebased(std::vector<ProfileEntry>& dst, const std::vector<ProfileEntry>& src,
                           const Scalar& a, const BosonAlgebra& alg) {
    for (const auto& e : src) {
        ProfileEntry e2 = e;
        if (!(a == Scalar(1L))) e2.ratio = e.ratio * a.monomial_pow(-alg.colors[e.color].zstep);
        merge_entry(dst, e2);
    }
}

void drop_zero_entries(std::vector<ProfileEntry>& list) {
    std::erase_if(list, [](const ProfileEntry& e) { return e.weight == 0; });
}

} // namespace

CurrentSum regular_product(const CurrentSum& A, const CurrentSum& B, const Scalar& a,
                           const std::vector<Scalar>& declared_pole_ratios,
                           const BosonAlgebra& alg) {
    CurrentSum out;
    for (const auto& va : A) {
        for (const auto& vb : B) {
            std::vector<Factor> factors;
            for (const auto& ea : va.annihilation) {
                for (const auto& eb : vb.creation) {
                    if (ea.color != eb.color) continue;
                    const BosonColor& col = alg.colors[ea.color];
                    ModeFilter supp = intersect(intersect(col.filter, ea.filter), eb.filter);
                    if (filter_empty(supp)) continue;
                    Rat w = ea.weight * eb.weight * col.scale;
                    if (w == 0) continue;
                    Scalar y = ea.ratio * eb.ratio.inverse() * a.monomial_pow(col.zstep);
                    if (supp.modulus == 1 && !supp.complement && !supp.multiples_only) {
                        add_factor(factors, y, w, col.zstep);
                    } else if (!supp.complement) {
                        add_factor(factors, y.pow(supp.modulus), w / supp.modulus,
                                   col.zstep * supp.modulus);
                    } else {
                        add_factor(factors, y, w, col.zstep);
                        add_factor(factors, y.pow(supp.modulus), -w / supp.modulus,
                                   col.zstep * supp.modulus);
                    }
                }
            }
            bool term_zero = false;
            Scalar value(1L);
            for (const auto& f : factors) {
                if (f.exponent == 0) continue;
                Scalar one_minus = Scalar(1L) - f.base;
                if (one_minus.is_zero()) {
                    if (f.exponent > 0) {
                        term_zero = true;
                        break;
                    }
                    throw error("regular_product: pole at the evaluation point");
                }
                if (!is_integer(f.exponent))
                    throw error("regular_product: fractional contraction exponent " +
                                f.exponent.get_str() + " at coincident evaluation");
                long e = to_long(f.exponent);
                if (e < 0) {
                    bool declared = false;
                    for (const auto& p : declared_pole_ratios) {
                        Scalar at_p = f.base * (p / a).monomial_pow(f.xpow);
                        if (at_p == Scalar(1L)) {
                            declared = true;
                            break;
                        }
                    }
                    if (!declared)
                        throw error("regular_product: undeclared pole factor (base " +
                                    f.base.str() + ")");
                }
                value *= one_minus.pow(e);
            }
            if (term_zero) continue;
            VertexOperator r;
            r.coeff = va.coeff * vb.coeff * value;
            r.z_power = va.z_power + vb.z_power;
            if (vb.z_power != 0 && !(a == Scalar(1L))) r.coeff *= a.monomial_pow(vb.z_power);
            size_t rank = std::max(va.zm.shift.size(), vb.zm.shift.size());
            if (rank > 0) {
                r.zm.shift.assign(rank, 0);
                r.zm.base_coeff.assign(rank, Scalar(1L));
                r.zm.base_zexp.assign(rank, Rat(0));
                for (size_t b = 0; b < rank; ++b) {
                    long sa = b < va.zm.shift.size() ? va.zm.shift[b] : 0;
                    long sb = b < vb.zm.shift.size() ? vb.zm.shift[b] : 0;
                    r.zm.shift[b] = sa + sb;
                    Scalar ca = b < va.zm.base_coeff.size() ? va.zm.base_coeff[b] : Scalar(1L);
                    Scalar cb = b < vb.zm.base_coeff.size() ? vb.zm.base_coeff[b] : Scalar(1L);
                    Rat eaz = b < va.zm.base_zexp.size() ? va.zm.base_zexp[b] : Rat(0);
                    Rat ebz = b < vb.zm.base_zexp.size() ? vb.zm.base_zexp[b] : Rat(0);
                    if (ebz != 0 && !(a == Scalar(1L))) cb = cb * a.monomial_pow(ebz);
                    if (sb != 0) {
                        if (!ca.is_one()) r.coeff *= ca.pow(sb);
                        r.z_power += eaz * sb;
                    }
                    r.zm.base_coeff[b] = ca * cb;
                    r.zm.base_zexp[b] = eaz + ebz;
                }
            }
            for (const auto& e : va.creation) merge_entry(r.creation, e);
            for (const auto& e : va.annihilation) merge_entry(r.annihilation, e);
            merge_entries_rebased(r.creation, vb.creation, a, alg);
            merge_entries_rebased(r.annihilation, vb.annihilation, a, alg);
            drop_zero_entries(r.creation);
            drop_zero_entries(r.annihilation);
            if (!r.coeff.is_zero()) out.push_back(std::move(r));
        }
    }
    return out;
}

VertexOperator normal_ordered_product(const VertexOperator& A, const VertexOperator& B,
                                      const Scalar& a, const BosonAlgebra& alg) {
    if (!A.zm.trivial() || !B.zm.trivial())
        throw error("normal_ordered_product: lattice zero modes not supported here");
    VertexOperator r;
    r.coeff = A.coeff * B.coeff;
    r.z_power = A.z_power + B.z_power;
    if (B.z_power != 0 && !(a == Scalar(1L))) r.coeff *= a.monomial_pow(B.z_power);
    for (const auto& e : A.creation) merge_entry(r.creation, e);
    for (const auto& e : A.annihilation) merge_entry(r.annihilation, e);
    merge_entries_rebased(r.creation, B.creation, a, alg);
    merge_entries_rebased(r.annihilation, B.annihilation, a, alg);
    drop_zero_entries(r.creation);
    drop_zero_entries(r.annihilation);
    return r;
}

BosonVector apply_creator(long color, long k, const BosonVector& v, const BosonAlgebra& alg,
                          const Rat& cap) {
    BosonVector r;
    for (const auto& [s, c] : v.terms()) {
        BosonState s2 = s;
        s2.modes[{color, k}] += 1;
        if (state_degree(s2, alg) > cap) continue;
        r.add_term(s2, c);
    }
    return r;
}

BosonVector apply_annihilator(long color, long k, const BosonVector& v, const BosonAlgebra& alg) {
    BosonVector r;
    Scalar ks{Rat(k) * alg.colors[color].scale};
    for (const auto& [s, c] : v.terms()) {
        auto it = s.modes.find({color, k});
        if (it == s.modes.end()) continue;
        BosonState s2 = s;
        long m = it->second;
        if (m == 1)
            s2.modes.erase({color, k});
        else
            s2.modes[{color, k}] = m - 1;
        r.add_term(s2, c * ks * Scalar(Rat(m)));
    }
    return r;
}

std::string vertex_str(const VertexOperator& v) {
    std::ostringstream os;
    os << "(" << v.coeff.str() << ") z^(" << v.z_power.get_str() << ") exp[";
    for (const auto& e : v.creation)
        os << " c(" << e.color << "," << e.weight.get_str() << "," << e.ratio.str() << ")";
    os << " |";
    for (const auto& e : v.annihilation)
        os << " a(" << e.color << "," << e.weight.get_str() << "," << e.ratio.str() << ")";
    os << " ]";
    if (!v.zm.trivial()) {
        os << " shift(";
        for (size_t i = 0; i < v.zm.shift.size(); ++i) {
            if (i) os << ",";
            os << v.zm.shift[i];
        }
        os << ")";
    }
    return os.str();
}

} // namespace qdiff
