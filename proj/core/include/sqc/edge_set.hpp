#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sqc/cyclic_index.hpp"

namespace sqc {

/// Smallest n for which the square cycle is defined.
inline constexpr int kMinCycleLength = 5;

enum class EdgeKind : std::uint8_t { Frame, Window };

/// An edge of the square cycle.
///
/// Frame(i) joins v_i and v_{i+1}; Window(i) joins v_i and v_{i+2}. The index is
/// stored reduced mod n, so Frame(i) and Frame(i + n) compare equal.
struct EdgeId {
    EdgeKind kind;
    CyclicIndex index;

    static EdgeId frame(int n, std::int64_t i) { return {EdgeKind::Frame, CyclicIndex(i, n)}; }
    static EdgeId window(int n, std::int64_t i) { return {EdgeKind::Window, CyclicIndex(i, n)}; }

    /// Bit position inside an EdgeSet: frames occupy [0, n), windows [n, 2n).
    [[nodiscard]] int position() const noexcept {
        return kind == EdgeKind::Frame ? index.value() : index.modulus() + index.value();
    }
    [[nodiscard]] std::pair<int, int> endpoints() const noexcept;

    [[nodiscard]] static EdgeId from_position(int n, int position);

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

/// A spanning subgraph of C_n^2, stored as a bit vector over its 2n edges.
///
/// The vertex set is always all of Z_n; only the edge set varies. Values are
/// cheap to copy and compare. Ordering is by the integer value of the bit vector
/// (bit p has weight 2^p).
class EdgeSet {
public:
    /// Empty edge set. Throws std::domain_error if n < 5.
    explicit EdgeSet(int n);

    /// Builds from a bit mask; requires 2n <= 64.
    static EdgeSet from_mask(int n, std::uint64_t mask);
    static EdgeSet from_positions(int n, const std::vector<int>& positions);
    static EdgeSet from_edges(int n, const std::vector<EdgeId>& edges);

    [[nodiscard]] int n() const noexcept { return n_; }
    /// Size of the edge universe, 2n.
    [[nodiscard]] int universe_size() const noexcept { return 2 * n_; }

    [[nodiscard]] bool contains(int position) const;
    [[nodiscard]] bool contains(const EdgeId& e) const { return contains(e.position()); }

    void insert(int position);
    void insert(const EdgeId& e) { insert(e.position()); }
    void erase(int position);
    void erase(const EdgeId& e) { erase(e.position()); }

    [[nodiscard]] int count() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return count() == 0; }
    [[nodiscard]] bool is_subset_of(const EdgeSet& other) const;
    [[nodiscard]] bool intersects(const EdgeSet& other) const;

    EdgeSet& operator|=(const EdgeSet& other);
    EdgeSet& operator&=(const EdgeSet& other);
    EdgeSet& operator-=(const EdgeSet& other);

    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) noexcept;

    /// Sorted bit positions of the present edges.
    [[nodiscard]] std::vector<int> positions() const;
    [[nodiscard]] std::vector<int> frame_indices() const;
    [[nodiscard]] std::vector<int> window_indices() const;

    /// Low 64 bits; requires 2n <= 64.
    [[nodiscard]] std::uint64_t to_mask() const;

    /// e.g. "{e0,e1,f3}"
    [[nodiscard]] std::string to_string() const;

private:
    void check_same_n(const EdgeSet& other) const;
    void check_position(int position) const;

    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace sqc
