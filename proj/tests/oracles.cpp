#include "oracles.hpp"

#include <bit>
#include <queue>

namespace oracle {

std::pair<int, int> endpoints(int n, int p) {
    if (p < n) {
        return {p, (p + 1) % n};
    }
    return {p - n, (p - n + 2) % n};
}

bool connected(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count <= 1) {
        return true;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertex_count;
}

bool connected_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < 2 * n; ++p) {
        if ((mask >> p) & 1U) {
            edges.push_back(endpoints(n, p));
        }
    }
    return connected(n, edges);
}

bool convex_mask(int n, std::uint64_t mask) {
    for (int i = 0; i < n; ++i) {
        const int c = static_cast<int>((mask >> i) & 1U) + static_cast<int>((mask >> ((i + 1) % n)) & 1U) +
                      static_cast<int>((mask >> (n + i)) & 1U);
        if (c == 2) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> brute_force_convex(int n) {
    std::vector<std::uint64_t> out;
    const std::uint64_t end = std::uint64_t{1} << (2 * n);
    for (std::uint64_t m = 0; m < end; ++m) {
        if (convex_mask(n, m) && connected_mask(n, m)) {
            out.push_back(m);
        }
    }
    return out;
}

mpz_class dense_determinant(std::vector<std::vector<mpz_class>> a) {
    const std::size_t m = a.size();
    if (m == 0) {
        return 1;
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < m && a[r][k] == 0) {
                ++r;
            }
            if (r == m) {
                return 0;
            }
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

std::vector<std::vector<mpz_class>> dense_laplacian_minor(int vertex_count,
                                                          const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<mpz_class>> full(static_cast<std::size_t>(vertex_count),
                                             std::vector<mpz_class>(static_cast<std::size_t>(vertex_count), 0));
    for (auto [a, b] : edges) {
        full[a][a] += 1;
        full[b][b] += 1;
        full[a][b] -= 1;
        full[b][a] -= 1;
    }
    std::vector<std::vector<mpz_class>> minor;
    for (int r = 1; r < vertex_count; ++r) {
        minor.emplace_back(full[r].begin() + 1, full[r].end());
    }
    return minor;
}

std::uint64_t brute_force_tree_count(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    const auto e = edges.size();
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
        if (std::popcount(m) != vertex_count - 1) {
            continue;
        }
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0; i < e; ++i) {
            if ((m >> i) & 1U) {
                chosen.push_back(edges[i]);
            }
        }
        if (connected(vertex_count, chosen)) {
            ++count;
        }
    }
    return count;
}

sqc::EdgeSet random_order_closure(const sqc::EdgeSet& g, std::mt19937_64& rng) {
    const int n = g.n();
    sqc::EdgeSet h = g;
    while (true) {
        std::vector<int> firing;
        for (int i = 0; i < n; ++i) {
            const int members[3] = {i, (i + 1) % n, n + i};
            int c = 0;
            for (int p : members) {
                c += h.contains(p) ? 1 : 0;
            }
            if (c == 2) {
                firing.push_back(i);
            }
        }
        if (firing.empty()) {
            return h;
        }
        const int i = firing[std::uniform_int_distribution<std::size_t>(0, firing.size() - 1)(rng)];
        h.insert(i);
        h.insert((i + 1) % n);
        h.insert(n + i);
    }
}

sqc::EdgeSet random_edge_set(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    sqc::EdgeSet g(n);
    for (int p = 0; p < 2 * n; ++p) {
        if (coin(rng)) {
            g.insert(p);
        }
    }
    return g;
}

std::vector<std::uint64_t> brute_force_trees(int n, std::uint64_t graph_mask) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * n)); ++m) {
        if ((m & ~graph_mask) != 0 || std::popcount(m) != n - 1) {
            continue;
        }
        if (connected_mask(n, m)) {
            out.push_back(m);
        }
    }
    return out;
}

}  // namespace oracle
