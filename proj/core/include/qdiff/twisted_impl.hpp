#ifndef QDIFF_TWISTED_IMPL_HPP
#define QDIFF_TWISTED_IMPL_HPP

// Template bodies for the realization-generic relation battery.

namespace qdiff {

namespace detail {

template <class R, class Vec>
Vec comm_ee(const R& r, long x, long y, const Vec& v) {
    return r.e(x, r.e(y, v)) - r.e(y, r.e(x, v));
}
template <class R, class Vec>
Vec comm_ff(const R& r, long x, long y, const Vec& v) {
    return r.f(x, r.f(y, v)) - r.f(y, r.f(x, v));
}

} // namespace detail

// Chevalley relations in twisted integer-mode form. With E^tw[j] =
// E_{1, nj+n_tw} and F^tw[k] = E_{-1, nk-n_tw} over the fine tower q^{1/n},
// the bracket [E^tw[j], F^tw[k]] evaluates to
//   (q^{(j+k)/2} - q^{-(j+k)/2}) H^tw_{j+k} + delta_{j+k,0} (n_tw + j n),
// and the H/locality/Serre relations keep their untwisted mode form.
template <class R>
CheckReport twisted_relations_check(const R& real0, long mode_bound, const Rat& deg_window) {
    Rat margin(3 * (mode_bound + 2) + 6);
    R real = real0.with_cap(deg_window + margin);
    const Tower& tw = real.tower();
    auto states = real.states(deg_window);
    auto fail = [&](const std::string& what, const std::string& st, const std::string& lhs,
                    const std::string& rhs) -> CheckReport {
        return {false, what + " fails on " + st + ": lhs=" + lhs + " rhs=" + rhs};
    };
    for (const auto& s : states) {
        auto v = real.basis(s);
        // [H_k, H_l] = k c delta_{k+l,0}
        for (long k = -mode_bound; k <= mode_bound; ++k) {
            if (k == 0) continue;
            for (long l = -mode_bound; l <= mode_bound; ++l) {
                if (l == 0) continue;
                auto lhs = real.h(k, real.h(l, v)) - real.h(l, real.h(k, v));
                auto rhs = k + l == 0 ? v.scaled(Scalar(k * real.c())) : decltype(v)();
                if (!((lhs - rhs).is_zero())) return fail("[H,H]", s.str(), lhs.str(), rhs.str());
            }
        }
        // [H_k, E[r]] = (q^{-k/2} - q^{k/2}) E[r+k];  [H_k, F[r]] opposite
        for (long k = -mode_bound; k <= mode_bound; ++k) {
            if (k == 0) continue;
            for (long r = -mode_bound; r <= mode_bound; ++r) {
                Scalar ce = tw.q(Rat(-k, 2)) - tw.q(Rat(k, 2));
                auto lhsE = real.h(k, real.e(r, v)) - real.e(r, real.h(k, v));
                auto rhsE = real.e(r + k, v).scaled(ce);
                if (!((lhsE - rhsE).is_zero()))
                    return fail("[H,E]", s.str(), lhsE.str(), rhsE.str());
                auto lhsF = real.h(k, real.f(r, v)) - real.f(r, real.h(k, v));
                auto rhsF = real.f(r + k, v).scaled(-ce);
                if (!((lhsF - rhsF).is_zero()))
                    return fail("[H,F]", s.str(), lhsF.str(), rhsF.str());
            }
        }
        // locality windows
        Scalar qq = tw.q(Rat(1)) + tw.q(Rat(-1));
        for (long r = -mode_bound; r <= mode_bound; ++r) {
            for (long s2 = -mode_bound; s2 <= mode_bound; ++s2) {
                auto totE = detail::comm_ee(real, r + 2, s2, v) -
                            detail::comm_ee(real, r + 1, s2 + 1, v).scaled(qq) +
                            detail::comm_ee(real, r, s2 + 2, v);
                if (!totE.is_zero()) return fail("locality E", s.str(), totE.str(), "0");
                auto totF = detail::comm_ff(real, r + 2, s2, v) -
                            detail::comm_ff(real, r + 1, s2 + 1, v).scaled(qq) +
                            detail::comm_ff(real, r, s2 + 2, v);
                if (!totF.is_zero()) return fail("locality F", s.str(), totF.str(), "0");
            }
        }
        // [E[j], F[k]] with central terms
        for (long j = -mode_bound; j <= mode_bound; ++j) {
            for (long k = -mode_bound; k <= mode_bound; ++k) {
                auto lhs = real.e(j, real.f(k, v)) - real.f(k, real.e(j, v));
                decltype(v) rhs;
                long m = j + k;
                if (m != 0) {
                    rhs = real.h(m, v).scaled(tw.q(Rat(m, 2)) - tw.q(Rat(-m, 2)));
                } else {
                    rhs = v.scaled(Scalar(real.cprime() + j * real.c()));
                }
                if (!((lhs - rhs).is_zero()))
                    return fail("[E,F] (j=" + std::to_string(j) + ",k=" + std::to_string(k) + ")",
                                s.str(), lhs.str(), rhs.str());
            }
        }
        // Serre windows, |j_i| <= 1
        for (long j1 = -1; j1 <= 1; ++j1)
            for (long j2 = -1; j2 <= 1; ++j2)
                for (long j3 = -1; j3 <= 1; ++j3) {
                    auto tripleE = [&](long x1, long x2, long x3) {
                        return real.e(x1, detail::comm_ee(real, x2, x3, v)) -
                               detail::comm_ee(real, x2, x3, real.e(x1, v));
                    };
                    auto tot = tripleE(j1, j2 + 1, j3 - 1) + tripleE(j2, j3 + 1, j1 - 1) +
                               tripleE(j3, j1 + 1, j2 - 1);
                    if (!tot.is_zero()) return fail("serre E", s.str(), tot.str(), "0");
                    auto tripleF = [&](long x1, long x2, long x3) {
                        return real.f(x1, detail::comm_ff(real, x2, x3, v)) -
                               detail::comm_ff(real, x2, x3, real.f(x1, v));
                    };
                    auto totF = tripleF(j1, j2 + 1, j3 - 1) + tripleF(j2, j3 + 1, j1 - 1) +
                                tripleF(j3, j1 + 1, j2 - 1);
                    if (!totF.is_zero()) return fail("serre F", s.str(), totF.str(), "0");
                }
    }
    return {};
}

template <class R>
std::vector<long> realization_character(const R& real, long micro_max) {
    long n = real.c();
    std::vector<long> out(micro_max + 1, 0);
    for (const auto& s : real.states(Rat(micro_max, n))) {
        Rat d = real.degree(s) * n;
        if (!is_integer(d)) throw error("realization_character: non-integral micro degree");
        long m = to_long(d);
        if (m <= micro_max) ++out[m];
    }
    return out;
}

template <class R>
Fingerprint realization_fingerprint(const R& real0, long micro_max, long mode_bound) {
    long n = real0.c();
    Rat window(micro_max, n);
    R real = real0.with_cap(window + Rat(2 * (mode_bound + 2)));
    Fingerprint fp;
    auto states = real.states(window);
    fp.hh.assign(micro_max + 1, Scalar());
    for (long j = -mode_bound; j <= mode_bound; ++j)
        fp.ef[j].assign(micro_max + 1, Scalar());
    for (const auto& s : states) {
        long m = to_long(real.degree(s) * n);
        auto v = real.basis(s);
        fp.hh[m] += real.coeff(real.h(-1, real.h(1, v)), s);
        for (long j = -mode_bound; j <= mode_bound; ++j)
            fp.ef[j][m] += real.coeff(real.e(j, real.f(-j, v)), s);
    }
    for (auto& x : fp.hh) x.canonicalize();
    for (auto& [j, vec] : fp.ef)
        for (auto& x : vec) x.canonicalize();
    return fp;
}

} // namespace qdiff

#endif
