#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sqc/cyclic_index.hpp"
#include "sqc/edge_set.hpp"

namespace sqc {

/// T_i = {e_i, e_{i+1}, f_i}.
struct Triangle {
    CyclicIndex index;
    std::array<EdgeId, 3> members;

    [[nodiscard]] int n() const noexcept { return index.modulus(); }
    [[nodiscard]] EdgeSet as_edge_set() const;
};

/// Undirected simple graph on vertices 0..vertex_count-1.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// The path-power graph S_k on vertices 1..k, joining labels at distance 1 or 2.
struct StripGraph {
    int k = 0;
    /// Pairs of 1-based labels (a, b) with a < b.
    std::vector<std::pair<int, int>> edges;

    /// Relabels to 0-based vertices.
    [[nodiscard]] SimpleGraph to_simple_graph() const;
};

/// C_n^2 with all n frames and n windows. Throws std::domain_error if n < 5.
[[nodiscard]] EdgeSet square_cycle(int n);
[[nodiscard]] EdgeSet all_frames(int n);
[[nodiscard]] EdgeSet all_windows(int n);

[[nodiscard]] Triangle triangle(int n, std::int64_t i);

/// Throws std::domain_error if k <= 0.
[[nodiscard]] StripGraph strip_graph(int k);

/// Largest admissible k for escape routes: ceil((n - 2) / 2).
[[nodiscard]] constexpr int max_escape_k(int n) noexcept { return (n - 1) / 2; }

/// ES(n,k,j) = {f_j, f_{j+2k+1}} U {e_{j+1}, ..., e_{j+2k+1}}, indices mod n.
///
/// Computed as a set: when n is odd and k = (n-1)/2 the two windows coincide and the
/// frames wrap all the way round. Throws std::out_of_range unless
/// 0 <= k <= max_escape_k(n).
[[nodiscard]] EdgeSet escape_route(int n, int k, std::int64_t j);

/// S_{n,k,j}: the complement of escape_route(n,k,j) in square_cycle(n).
[[nodiscard]] EdgeSet strip_with_tails(int n, int k, std::int64_t j);

/// Whether the spanning subgraph (Z_n, g) is connected.
[[nodiscard]] bool is_connected(const EdgeSet& g);

[[nodiscard]] SimpleGraph to_simple_graph(const EdgeSet& g);

}  // namespace sqc
