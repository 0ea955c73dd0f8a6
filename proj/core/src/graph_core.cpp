#include "sqc/graph_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sqc {

namespace {

void require_cycle_length(int n) {
    if (n < kMinCycleLength) {
        throw std::domain_error("square cycle requires n >= 5, got " + std::to_string(n));
    }
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

EdgeSet Triangle::as_edge_set() const {
    EdgeSet s(n());
    for (const auto& e : members) {
        s.insert(e);
    }
    return s;
}

SimpleGraph StripGraph::to_simple_graph() const {
    SimpleGraph g{k, {}};
    g.edges.reserve(edges.size());
    for (auto [a, b] : edges) {
        g.edges.emplace_back(a - 1, b - 1);
    }
    return g;
}

EdgeSet square_cycle(int n) {
    require_cycle_length(n);
    return all_frames(n) | all_windows(n);
}

EdgeSet all_frames(int n) {
    EdgeSet s(n);
    for (int i = 0; i < n; ++i) {
        s.insert(i);
    }
    return s;
}

EdgeSet all_windows(int n) {
    EdgeSet s(n);
    for (int i = 0; i < n; ++i) {
        s.insert(n + i);
    }
    return s;
}

Triangle triangle(int n, std::int64_t i) {
    require_cycle_length(n);
    const CyclicIndex idx(i, n);
    return Triangle{idx,
                    {EdgeId::frame(n, idx.value()), EdgeId::frame(n, idx.value() + 1),
                     EdgeId::window(n, idx.value())}};
}

StripGraph strip_graph(int k) {
    if (k <= 0) {
        throw std::domain_error("strip_graph: k must be positive, got " + std::to_string(k));
    }
    StripGraph g{k, {}};
    for (int a = 1; a <= k; ++a) {
        for (int b = a + 1; b <= std::min(k, a + 2); ++b) {
            g.edges.emplace_back(a, b);
        }
    }
    return g;
}

EdgeSet escape_route(int n, int k, std::int64_t j) {
    require_cycle_length(n);
    if (k < 0 || k > max_escape_k(n)) {
        throw std::out_of_range("escape_route: k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(max_escape_k(n)) + "] for n=" + std::to_string(n));
    }
    EdgeSet s(n);
    s.insert(EdgeId::window(n, j));
    s.insert(EdgeId::window(n, j + 2 * k + 1));
    for (std::int64_t i = j + 1; i <= j + 2 * k + 1; ++i) {
        s.insert(EdgeId::frame(n, i));
    }
    return s;
}

EdgeSet strip_with_tails(int n, int k, std::int64_t j) {
    return square_cycle(n) - escape_route(n, k, j);
}

bool is_connected(const EdgeSet& g) {
    const int n = g.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (int p : g.positions()) {
        auto [a, b] = EdgeId::from_position(n, p).endpoints();
        const int ra = find_root(parent, a);
        const int rb = find_root(parent, b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

SimpleGraph to_simple_graph(const EdgeSet& g) {
    SimpleGraph out{g.n(), {}};
    for (int p : g.positions()) {
        out.edges.push_back(EdgeId::from_position(g.n(), p).endpoints());
    }
    return out;
}

}  // namespace sqc
