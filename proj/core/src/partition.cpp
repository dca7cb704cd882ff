#include "qdiff/partition.hpp"
#include "qdiff/maya.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdiff {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw error("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw error("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<long> parts;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw error("Partition::parse: expected '['");
    ++i;
    skip();
    while (i < text.size() && text[i] != ']') {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw error("Partition::parse: expected digit");
        parts.push_back(std::stol(text.substr(start, i - start)));
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip();
        }
    }
    if (i >= text.size()) throw error("Partition::parse: expected ']'");
    return Partition(std::move(parts));
}

long Partition::size() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<long> c(parts_[0], 0);
    for (long p : parts_)
        for (long j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

long Partition::content_sum() const {
    long s = 0;
    for (long i = 0; i < rows(); ++i)
        for (long j = 1; j <= parts_[i]; ++j) s += (i + 1) - j;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

std::vector<BoxData> hooks_contents(const Partition& p) {
    std::vector<BoxData> out;
    Partition conj = p.conjugate();
    for (long i = 1; i <= p.rows(); ++i) {
        for (long j = 1; j <= p.part(i - 1); ++j) {
            long arm = p.part(i - 1) - j;
            long leg = conj.part(j - 1) - i;
            out.push_back({i, j, arm + leg + 1, i - j});
        }
    }
    return out;
}

namespace {

// Occupied positions of (lambda, charge 0) within a window, as a dense flag
// vector flags[p - lo].
struct Window {
    long lo;
    std::vector<bool> occ;

    Window(const Partition& p, long margin) {
        long l1 = p.rows() ? p.parts()[0] : 0;
        lo = -l1 - margin - 1;
        long hi = p.rows() + margin + 1;
        occ.assign(hi - lo + 1, false);
        MayaDiagram m(p, 0);
        for (long pos = lo; pos <= hi; ++pos) occ[pos - lo] = m.occupied(pos);
    }
    bool get(long p) const { return occ[p - lo]; }
};

Partition window_to_partition(const Window& w) {
    std::set<long> below;
    long hi = w.lo + static_cast<long>(w.occ.size()) - 1;
    for (long p = w.lo; p <= hi; ++p)
        if (w.get(p)) below.insert(p);
    return MayaDiagram::from_occupied(below, hi + 1).to_partition();
}

} // namespace

std::vector<RibbonMove> add_ribbons(const Partition& lambda, long b) {
    if (b < 1) throw error("add_ribbons: b must be >= 1");
    std::vector<RibbonMove> out;
    Window w(lambda, b);
    long hi = w.lo + static_cast<long>(w.occ.size()) - 1;
    // adding a b-ribbon moves an occupied p to the empty p-b
    for (long p = w.lo + b; p <= hi; ++p) {
        if (!w.get(p) || w.get(p - b)) continue;
        long ht = 0;
        for (long x = p - b + 1; x < p; ++x)
            if (w.get(x)) ++ht;
        Window moved = w;
        moved.occ[p - w.lo] = false;
        moved.occ[p - b - w.lo] = true;
        out.push_back({window_to_partition(moved), ht});
    }
    std::sort(out.begin(), out.end(),
              [](const RibbonMove& a, const RibbonMove& b2) { return a.result < b2.result; });
    return out;
}

std::vector<RibbonMove> remove_ribbons(const Partition& lambda, long b) {
    if (b < 1) throw error("remove_ribbons: b must be >= 1");
    std::vector<RibbonMove> out;
    Window w(lambda, b);
    long hi = w.lo + static_cast<long>(w.occ.size()) - 1;
    // removing a b-ribbon moves an occupied p to the empty p+b
    for (long p = w.lo; p + b <= hi; ++p) {
        if (!w.get(p) || w.get(p + b)) continue;
        long ht = 0;
        for (long x = p + 1; x < p + b; ++x)
            if (w.get(x)) ++ht;
        Window moved = w;
        moved.occ[p - w.lo] = false;
        moved.occ[p + b - w.lo] = true;
        out.push_back({window_to_partition(moved), ht});
    }
    std::sort(out.begin(), out.end(),
              [](const RibbonMove& a, const RibbonMove& b2) { return a.result < b2.result; });
    return out;
}

LatticePoint::LatticePoint(std::vector<long> l) : l_(std::move(l)) {
    long s = 0;
    for (long x : l_) s += x;
    if (s != 0) throw error("LatticePoint: components must sum to zero");
}

Rat LatticePoint::norm() const {
    long n = size();
    Rat acc(0);
    for (long i = 0; i < n; ++i) {
        Rat a = Rat(l_[i]) + Rat(i, n);
        acc += a * a - Rat(i * i, n * n);
    }
    return acc / 2;
}

std::string LatticePoint::str() const {
    std::ostringstream os;
    os << "(";
    for (long i = 0; i < size(); ++i) {
        if (i) os << ",";
        os << l_[i];
    }
    os << ")";
    return os.str();
}

CoreQuotient core_quotient(const Partition& lambda, long n) {
    if (n < 2) throw error("core_quotient: n must be >= 2");
    MayaDiagram m(lambda, 0);
    std::vector<MayaDiagram> subs = maya_split(m, n);
    std::vector<long> charges(n);
    std::vector<Partition> quotients(n);
    for (long r = 0; r < n; ++r) {
        charges[r] = subs[r].charge();
        quotients[r] = subs[r].to_partition();
    }
    LatticePoint l(charges);
    return {core_of_lattice(l), l, std::move(quotients)};
}

Partition from_core_quotient(const LatticePoint& charges, const std::vector<Partition>& quotients) {
    long n = charges.size();
    if (static_cast<long>(quotients.size()) != n)
        throw error("from_core_quotient: need one quotient per residue");
    std::vector<MayaDiagram> subs;
    subs.reserve(n);
    for (long r = 0; r < n; ++r) subs.emplace_back(quotients[r], charges[r]);
    MayaDiagram m = maya_interleave(subs);
    if (m.charge() != 0) throw error("from_core_quotient: charges must sum to zero");
    return m.to_partition();
}

Partition core_of_lattice(const LatticePoint& charges) {
    long n = charges.size();
    std::vector<MayaDiagram> subs;
    subs.reserve(n);
    for (long r = 0; r < n; ++r) subs.emplace_back(Partition(), charges[r]);
    return maya_interleave(subs).to_partition();
}

std::vector<LatticePoint> enumerate_lattice(long n, const Rat& bound) {
    if (bound < 0) return {};
    double b = bound.get_d();
    long box = static_cast<long>(std::ceil(std::sqrt(2.0 * b + n) + 1)) + 1;
    std::vector<LatticePoint> out;
    std::vector<long> cur(n, 0);
    // depth-first over l_0..l_{n-2}
    auto rec = [&](auto&& self, long depth, long partial_sum) -> void {
        if (depth == n - 1) {
            cur[n - 1] = -partial_sum;
            if (std::abs(cur[n - 1]) > box) return;
            LatticePoint l(cur);
            if (l.norm() <= bound) out.push_back(l);
            return;
        }
        for (long v = -box; v <= box; ++v) {
            cur[depth] = v;
            self(self, depth + 1, partial_sum + v);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
// Iterate the paper's (i,j,k) triple set: i, j in [0,n) with l_i > l_j;
// k from 0 when i > j, from 1 when i < j, up to l_i - l_j - 1.
template <typename F>
void for_each_ijk(const LatticePoint& l, F&& f) {
    long n = l.size();
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (i == j || l[i] <= l[j]) continue;
            long k0 = i > j ? 0 : 1;
            for (long k = k0; k <= l[i] - l[j] - 1; ++k) f(i, j, k);
        }
    }
}
} // namespace

Scalar hook_product_core(const LatticePoint& l, const Tower& tower, const Rat& mult) {
    return hook_product_core_pow(l, tower, mult, 1);
}

Scalar hook_product_core_pow(const LatticePoint& l, const Tower& tower, const Rat& mult,
                             long power) {
    long n = l.size();
    Scalar acc(1L);
    for_each_ijk(l, [&](long i, long j, long k) {
        Scalar f = tower.sinh_q(Rat(n * k + i - j) * mult);
        acc *= f.pow((l[i] - l[j] - k) * power);
    });
    return acc;
}

std::vector<Partition> partitions_of(long d) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d < 1 ? 0 : d);
    if (d == 0) out = {Partition()};
    return out;
}

} // namespace qdiff
