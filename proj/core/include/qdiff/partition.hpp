#ifndef QDIFF_PARTITION_HPP
#define QDIFF_PARTITION_HPP

#include "qdiff/scalar.hpp"

#include <compare>
#include <vector>

namespace qdiff {

// Young diagram, canonical form: weakly decreasing positive parts, no
// trailing zeros. Boxes are 1-based (row i, column j), content c(s) = i - j.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    static Partition parse(const std::string& text); // "[4,2,1]" or "[]"

    const std::vector<long>& parts() const { return parts_; }
    long size() const;                       // |lambda|
    long rows() const { return static_cast<long>(parts_.size()); }
    long part(long i) const { return i < rows() ? parts_[i] : 0; } // 0-based
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    long content_sum() const; // sum of i - j over boxes

    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<long> parts_;
};

struct BoxData {
    long row, col;    // 1-based
    long hook;        // hook length
    long content;     // i - j
};

std::vector<BoxData> hooks_contents(const Partition& p);

struct RibbonMove {
    Partition result;
    long height; // rows spanned minus one
};

// All mu obtained from lambda by adding / removing a single b-ribbon.
std::vector<RibbonMove> add_ribbons(const Partition& lambda, long b);
std::vector<RibbonMove> remove_ribbons(const Partition& lambda, long b);

// Element of Q_(n): integer vector summing to zero.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<long> l);

    const std::vector<long>& components() const { return l_; }
    long size() const { return static_cast<long>(l_.size()); }
    long operator[](long i) const { return l_[i]; }

    // 1/2 sum((l_i + i/n)^2 - (i/n)^2), n = size()
    Rat norm() const;

    auto operator<=>(const LatticePoint&) const = default;
    std::string str() const;

private:
    std::vector<long> l_;
};

struct CoreQuotient {
    Partition core;
    LatticePoint charges;
    std::vector<Partition> quotients;
};

CoreQuotient core_quotient(const Partition& lambda, long n);
Partition from_core_quotient(const LatticePoint& charges, const std::vector<Partition>& quotients);
Partition core_of_lattice(const LatticePoint& charges);

// All lattice points with norm() <= bound, sorted.
std::vector<LatticePoint> enumerate_lattice(long n, const Rat& bound);

// prod over the (i,j,k) triples of (q^{mult(nk+i-j)/2} - q^{-mult(nk+i-j)/2})
// raised to l_i - l_j - k; equals the hook product of the n-core at
// q -> q^{mult}.
Scalar hook_product_core(const LatticePoint& l, const Tower& tower, const Rat& mult = Rat(1));

// Same product with per-triple exponent scaled by `power` (used squared in
// the one-loop factors).
Scalar hook_product_core_pow(const LatticePoint& l, const Tower& tower, const Rat& mult,
                             long power);

std::vector<Partition> partitions_of(long d);

} // namespace qdiff

#endif
