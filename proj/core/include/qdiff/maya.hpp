#ifndef QDIFF_MAYA_HPP
#define QDIFF_MAYA_HPP

#include "qdiff/partition.hpp"

#include <set>

namespace qdiff {

// Maya diagram: occupied subset of Z, cofinite towards +infinity, finite
// towards -infinity, stored as the symmetric difference from a vacuum.
// The charged partition (lambda, c) occupies {c + i - 1 - lambda_i : i >= 1};
// the charge-c vacuum occupies {c, c+1, ...}. Creating a particle lowers the
// charge by one.
class MayaDiagram {
public:
    MayaDiagram() = default; // charge-0 vacuum
    MayaDiagram(const Partition& lambda, long charge);

    static MayaDiagram from_occupied(const std::set<long>& occupied_below, long tail_start);

    bool occupied(long p) const;
    long charge() const;
    Partition to_partition() const;

    // Positions below which everything is empty / above which everything is
    // occupied (bounds for iteration).
    long lo() const;
    long hi() const;

    // Toggle helpers used by the fermion calculus; they do not track signs.
    MayaDiagram with_created(long p) const;  // requires empty at p
    MayaDiagram with_removed(long p) const;  // requires occupied at p
    long count_occupied_below(long p) const;

    auto operator<=>(const MayaDiagram&) const = default;

    std::string str() const;

private:
    // added_: occupied positions < tail_start_ not implied by the tail;
    // removed_: empty positions >= base_ kept as holes. Canonical storage:
    // all positions < base_ empty, all >= tail_start_ occupied.
    std::set<long> occ_;     // occupied positions in [base_, tail_start_)
    long base_ = 0;          // everything below is empty
    long tail_start_ = 0;    // everything from here on is occupied

    void normalize();
};

// Split occupied positions by residue mod n (p = n p' + r); returns the n
// sub-diagrams in residue order.
std::vector<MayaDiagram> maya_split(const MayaDiagram& m, long n);
MayaDiagram maya_interleave(const std::vector<MayaDiagram>& subs);

} // namespace qdiff

#endif
