#include "qdiff/blocks.hpp"

namespace qdiff {

Tower identity_tower(long n) { return Tower{2 * n, 1, n}; }

ZSeries lhs_series(long n, const Rat& order_top, const Tower& tower) {
    if (n < 1) throw error("lhs_series: n must be >= 1");
    return double_pochhammer(tower.q(Rat(1, n)), Rat(1, n), Rat(1, n), Rat(1, n), order_top,
                             tower);
}

namespace {

// Whittaker pair for parameters u and its Shapovalov-dual configuration.
ZSeries sector_pairing(const std::vector<Scalar>& u, long D, const Tower& tower) {
    long n = static_cast<long>(u.size());
    FockConfig cfg{tower, u, D};
    std::vector<Scalar> dual(n);
    for (long j = 0; j < n; ++j) dual[j] = tower.q(Rat(1)) / u[n - 1 - j];
    FockConfig dual_cfg{tower, dual, D};
    WhittakerVector right = whittaker_solve(cfg, D);
    WhittakerVector left = whittaker_solve(dual_cfg, D);
    return pairing_series(left, right, D);
}

} // namespace

ZSeries rhs_series(long n, const Rat& order_top, const Tower& tower,
                   std::vector<LatticePoint>* lattice_used) {
    if (n < 2) throw error("rhs_series: n must be >= 2");
    long step = lcm_long(2 * n, den_long(order_top));
    ZSeries total = ZSeries::zero(Rat(0), step, to_long(rat_floor(order_top * step)) + 1);
    for (const auto& l : enumerate_lattice(n, order_top)) {
        Rat norm = l.norm();
        // every excluded point has norm > order_top by construction
        long D = to_long(rat_floor(order_top - norm));
        std::vector<Scalar> u;
        for (long a = 0; a < n; ++a) u.push_back(tower.q(Rat(a, n) + Rat(l[a])));
        ZSeries pair = sector_pairing(u, D, tower);
        Partition core = core_of_lattice(l);
        Scalar r_factor = hook_product_core_pow(l, tower, Rat(1, n), -2);
        if (core.size() % 2) r_factor = -r_factor;
        ZSeries term = pair.scaled(r_factor).shifted(norm);
        // the next sector coefficient sits at norm + D + 1 > order_top, so
        // the window extends to order_top with exact zeros
        long s = lcm_long(term.step_den(), step);
        term = term.rebased(term.gamma(), s);
        std::vector<Scalar> padded = term.coeffs();
        long want = to_long(rat_floor((order_top - term.gamma()) * s)) + 1;
        if (want > static_cast<long>(padded.size())) padded.resize(want, Scalar());
        total = total + ZSeries(term.gamma(), s, std::move(padded));
        if (lattice_used) lattice_used->push_back(l);
    }
    return total;
}

IdentityReport verify_identity(long n, const Rat& order_top, const Tower& tower) {
    IdentityReport rep;
    rep.n = n;
    rep.order = order_top;
    ZSeries lhs = lhs_series(n, order_top, tower);
    ZSeries rhs = rhs_series(n, order_top, tower, &rep.lattice);
    long s = lcm_long(lhs.step_den(), rhs.step_den());
    rep.pass = true;
    for (Rat e(0); e <= order_top; e += Rat(1, s)) {
        IdentityRow row;
        row.exponent = e;
        row.lhs = lhs.coeff(e);
        row.rhs = rhs.coeff(e);
        row.lhs.canonicalize();
        row.rhs.canonicalize();
        row.pass = row.lhs == row.rhs;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ZSeries z_function(const std::vector<Scalar>& u, long D, const Tower& tower) {
    Rat offset(0);
    for (const auto& ui : u) {
        auto g = tower.log_q(ui);
        if (!g) throw error("z_function: parameter is not an explicit q-power: " + ui.str());
        offset += (*g) * (*g);
    }
    offset /= 2;
    ZSeries pair = sector_pairing(u, D, tower);
    return pair.shifted(offset);
}

} // namespace qdiff
