#ifndef QDIFF_LINALG_HPP
#define QDIFF_LINALG_HPP

#include "qdiff/scalar.hpp"

#include <optional>
#include <vector>

namespace qdiff {

// Incremental exact row reduction over the Scalar field. Rows are fed in the
// caller's preferred order; pivots pick the smallest entry by term count.
class RowReducer {
public:
    explicit RowReducer(size_t cols) : cols_(cols) {}

    // Feed one equation sum_j a_j x_j = b. Returns true if the row added a
    // new pivot, false if it reduced to 0 = 0. Throws on 0 = nonzero.
    bool add_row(std::vector<Scalar> a, Scalar b);

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    bool determined() const { return rank() == cols_; }

    // Unique solution; requires determined().
    std::vector<Scalar> solve() const;

private:
    struct Row {
        std::vector<Scalar> a;
        Scalar b;
        size_t pivot;
    };
    size_t cols_;
    std::vector<Row> rows_;
};

} // namespace qdiff

#endif
