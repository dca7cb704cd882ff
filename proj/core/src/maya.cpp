#include "qdiff/maya.hpp"

#include <sstream>

namespace qdiff {

MayaDiagram::MayaDiagram(const Partition& lambda, long charge) {
    long rows = lambda.rows();
    base_ = charge - (rows ? lambda.parts()[0] : 0);
    tail_start_ = charge + rows;
    for (long i = 1; i <= rows; ++i) occ_.insert(charge + i - 1 - lambda.parts()[i - 1]);
    normalize();
}

MayaDiagram MayaDiagram::from_occupied(const std::set<long>& occupied_below, long tail_start) {
    MayaDiagram m;
    m.occ_ = occupied_below;
    m.tail_start_ = tail_start;
    m.base_ = occupied_below.empty() ? tail_start : *occupied_below.begin();
    for (long p : occupied_below)
        if (p >= tail_start) throw error("MayaDiagram::from_occupied: position beyond tail");
    m.normalize();
    return m;
}

void MayaDiagram::normalize() {
    // absorb a contiguous run just below tail_start_ into the tail
    while (occ_.count(tail_start_ - 1)) {
        occ_.erase(tail_start_ - 1);
        --tail_start_;
    }
    base_ = occ_.empty() ? tail_start_ : *occ_.begin();
}

bool MayaDiagram::occupied(long p) const {
    if (p >= tail_start_) return true;
    return occ_.count(p) > 0;
}

long MayaDiagram::charge() const {
    return tail_start_ - static_cast<long>(occ_.size());
}

Partition MayaDiagram::to_partition() const {
    // positions sorted increasingly p_i; lambda_i = charge + i - 1 - p_i
    long c = charge();
    std::vector<long> parts;
    long i = 1;
    for (long p : occ_) {
        parts.push_back(c + i - 1 - p);
        ++i;
    }
    // tail positions give zero parts
    std::vector<long> nonzero;
    for (long x : parts)
        if (x != 0) nonzero.push_back(x);
    return Partition(std::move(nonzero));
}

long MayaDiagram::lo() const { return base_; }
long MayaDiagram::hi() const { return tail_start_; }

MayaDiagram MayaDiagram::with_created(long p) const {
    if (occupied(p)) throw error("MayaDiagram::with_created: occupied");
    MayaDiagram m = *this;
    m.occ_.insert(p);
    m.normalize();
    return m;
}

MayaDiagram MayaDiagram::with_removed(long p) const {
    if (!occupied(p)) throw error("MayaDiagram::with_removed: empty");
    MayaDiagram m = *this;
    if (p >= m.tail_start_) {
        for (long x = m.tail_start_; x < p; ++x) m.occ_.insert(x);
        m.tail_start_ = p + 1;
    } else {
        m.occ_.erase(p);
    }
    m.normalize();
    return m;
}

long MayaDiagram::count_occupied_below(long p) const {
    long cnt = 0;
    for (long x : occ_) {
        if (x < p)
            ++cnt;
        else
            break;
    }
    if (p > tail_start_) cnt += p - tail_start_;
    return cnt;
}

std::string MayaDiagram::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (long p : occ_) {
        if (!first) os << ",";
        first = false;
        os << p;
    }
    os << " | tail>=" << tail_start_ << "}";
    return os.str();
}

std::vector<MayaDiagram> maya_split(const MayaDiagram& m, long n) {
    std::vector<std::set<long>> below(n);
    std::vector<long> tails(n);
    long hi = m.hi() + n; // safe: everything >= m.hi() occupied
    // tail alignment: for residue r, positions n*p'+r >= hi are occupied; the
    // smallest such p' is ceil((hi - r)/n).
    for (long r = 0; r < n; ++r) {
        long t = (hi - r + n - 1) / n; // ceil for positive values
        while (n * (t - 1) + r >= m.hi()) --t;
        tails[r] = t;
    }
    for (long p = m.lo(); p < m.hi(); ++p) {
        if (!m.occupied(p)) continue;
        long r = ((p % n) + n) % n;
        long pp = (p - r) / n;
        if (pp < tails[r]) below[r].insert(pp);
    }
    std::vector<MayaDiagram> out;
    out.reserve(n);
    for (long r = 0; r < n; ++r) out.push_back(MayaDiagram::from_occupied(below[r], tails[r]));
    return out;
}

MayaDiagram maya_interleave(const std::vector<MayaDiagram>& subs) {
    long n = static_cast<long>(subs.size());
    long hi = 0;
    for (long r = 0; r < n; ++r) hi = std::max(hi, n * subs[r].hi() + r);
    std::set<long> below;
    long lo = 0;
    for (long r = 0; r < n; ++r) lo = std::min(lo, n * subs[r].lo() + r);
    for (long p = lo; p < hi; ++p) {
        long r = ((p % n) + n) % n;
        long pp = (p - r) / n;
        if (subs[r].occupied(pp)) below.insert(p);
    }
    return MayaDiagram::from_occupied(below, hi);
}

} // namespace qdiff
