#pragma once

#include <utility>
#include <vector>

#include "sqc/big_count.hpp"
#include "sqc/graph_core.hpp"

namespace sqc {

/// Laplacian of a graph with one vertex's row and column deleted.
///
/// Stored as sparse rows; subgraphs of C_n^2 have at most five nonzeros per row.
class LaplacianMinor {
public:
    /// Throws std::invalid_argument if the graph has no vertices or removed_vertex is
    /// out of range. Self-loops are ignored; parallel edges add up.
    static LaplacianMinor of(const SimpleGraph& g, int removed_vertex = 0);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] BigCount entry(int row, int col) const;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// No pivoting: the minor is positive semidefinite, so a zero leading principal
    /// minor means the whole determinant is zero. Rows that have a zero in the pivot
    /// column are only rescaled by p_k / p_{k-1}; that rescaling telescopes, so it is
    /// deferred until the row is next read. Rows needing a real update are found
    /// through the pivot row, since the trailing block stays symmetric.
    [[nodiscard]] BigCount determinant() const;

private:
    using SparseRow = std::vector<std::pair<int, BigCount>>;
    std::vector<SparseRow> rows_;
};

}  // namespace sqc
