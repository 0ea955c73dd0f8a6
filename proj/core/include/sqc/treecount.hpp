#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqc/big_count.hpp"
#include "sqc/convexity.hpp"
#include "sqc/edge_set.hpp"
#include "sqc/graph_core.hpp"

namespace sqc {

/// Largest n accepted by the enumeration-backed routines.
inline constexpr int kMaxTreeEnumerationN = 12;

/// Raised when an enumerated object contradicts the structure theory; carries the
/// offending edge set.
class FalsificationError : public std::runtime_error {
public:
    FalsificationError(const std::string& what, EdgeSet witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    [[nodiscard]] const EdgeSet& witness() const noexcept { return witness_; }

private:
    EdgeSet witness_;
};

/// Spanning-tree count by the matrix-tree theorem: determinant of the Laplacian with
/// vertex 0's row and column removed. 0 for disconnected graphs, 1 for a single vertex.
[[nodiscard]] BigCount count_matrix_tree(const SimpleGraph& g);
[[nodiscard]] BigCount count_matrix_tree(const EdgeSet& g);
[[nodiscard]] BigCount count_matrix_tree(const StripGraph& g);

/// n * F_n^2. Throws std::domain_error if n < 5.
[[nodiscard]] BigCount count_formula(int n);

/// t(S_m) = F_{2m-2} for m >= 2, and 1 for the single-vertex strip.
/// Throws std::domain_error if m <= 0.
[[nodiscard]] BigCount count_strip(int m);

/// t(S_{n,k,j}) = t(S_{n-2k}); argument checks as for escape_route.
[[nodiscard]] BigCount count_strip_with_tails(int n, int k, std::int64_t j);

using TreeVisitor = std::function<void(const EdgeSet&)>;

/// Visits every spanning tree of g (as an edge subset), lexicographically by edge
/// position. Edges are chosen in increasing order and a rollback union-find rejects
/// a prefix as soon as it closes a cycle. Throws std::out_of_range if n > 12.
void enumerate_spanning_trees(const EdgeSet& g, const TreeVisitor& visit);
[[nodiscard]] std::vector<EdgeSet> spanning_trees(const EdgeSet& g);

struct DecomposeCell {
    int j = 0;
    int k = 0;
    BigCount count;
};

struct DecomposeTable {
    int n = 0;
    /// Ordered by k, then j; one cell per admissible (j, k).
    std::vector<DecomposeCell> cells;
    BigCount total;
};

/// Sorts every spanning tree of C_n^2 into the unique S_{n,k,j} containing it.
///
/// For each tree T this takes the triangle closure, classifies it, and independently
/// counts the strips S_{n,k,j} with T ⊆ S_{n,k,j}; the closure must be a strip and be
/// the only strip containing T. Any other outcome throws FalsificationError with T as
/// witness. `jobs` > 1 partitions trees by their first edge across threads.
/// Throws std::out_of_range unless 5 <= n <= 12.
[[nodiscard]] DecomposeTable decompose(int n, int jobs = 1);

}  // namespace sqc
