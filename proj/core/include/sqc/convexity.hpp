#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/edge_set.hpp"
#include "sqc/graph_core.hpp"

namespace sqc {

/// Catalog entry for a connected spanning convex subgraph of C_n^2.
struct ConvexLabel {
    enum class Variant : std::uint8_t { TrivialFull, TrivialWindows, Strip };

    Variant variant = Variant::TrivialFull;
    /// Only meaningful for Strip; j is reduced to [0, n).
    int j = 0;
    int k = 0;

    static ConvexLabel full() { return {Variant::TrivialFull, 0, 0}; }
    static ConvexLabel windows() { return {Variant::TrivialWindows, 0, 0}; }
    static ConvexLabel strip(int j, int k) { return {Variant::Strip, j, k}; }

    [[nodiscard]] bool is_trivial() const noexcept { return variant != Variant::Strip; }

    /// The edge set this label denotes for the given n.
    [[nodiscard]] EdgeSet to_edge_set(int n) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ConvexLabel&, const ConvexLabel&) = default;
};

/// Largest n accepted by enumerate_convex.
inline constexpr int kMaxConvexEnumerationN = 14;

/// |T ∩ g| <= 1 or T ⊆ g.
[[nodiscard]] bool is_convex_wrt(const EdgeSet& g, const Triangle& t);
[[nodiscard]] bool is_convex(const EdgeSet& g);

/// Smallest convex edge set containing g.
///
/// Repeatedly completes any triangle that holds exactly two edges of the current set.
/// Uses a worklist of triangle indices; adding an edge re-queues the (at most two)
/// triangles that contain it.
[[nodiscard]] EdgeSet closure(const EdgeSet& g);

/// Matches a connected spanning convex g against the catalog: C_n^2, the window graph
/// (n odd), or some S_{n,k,j}. Returns std::nullopt when g matches none of them, which
/// makes g a counterexample to the classification.
///
/// Throws std::invalid_argument if g is disconnected or not convex.
[[nodiscard]] std::optional<ConvexLabel> classify(const EdgeSet& g);

/// Every connected spanning convex subgraph of C_n^2, ascending by bit-vector value.
///
/// Frame choices fix most windows (a triangle with both frames forces its window in,
/// exactly one frame forces it out), so only windows over frame-free triangles are
/// branched on. Every candidate is re-checked with is_convex and is_connected.
/// `jobs` > 1 splits the frame masks across threads. Throws std::out_of_range unless
/// 5 <= n <= 14.
[[nodiscard]] std::vector<EdgeSet> enumerate_convex(int n, int jobs = 1);

/// The classified list predicted for n: C_n^2, the window graph when n is odd, then
/// S_{n,k,j} for k = 0..max_escape_k(n), j = 0..n-1.
[[nodiscard]] std::vector<std::pair<ConvexLabel, EdgeSet>> convex_catalog(int n);

/// Frame forcing on a connected spanning convex g: whenever
/// {e_{k-1}, f_k, f_{k+2}, ..., f_{k+2p-2}, e_{k+2p}} ⊆ g for 0 <= p < n, the frames
/// e_k..e_{k+2p-1} are all in g. Returns the first violating (k, p), if any.
[[nodiscard]] std::optional<std::pair<int, int>> find_frame_forcing_violation(const EdgeSet& g);

}  // namespace sqc
