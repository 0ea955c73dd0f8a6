#include "sqc/laplacian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sqc {

LaplacianMinor LaplacianMinor::of(const SimpleGraph& g, int removed_vertex) {
    if (g.vertex_count <= 0) {
        throw std::invalid_argument("LaplacianMinor: graph has no vertices");
    }
    if (removed_vertex < 0 || removed_vertex >= g.vertex_count) {
        throw std::invalid_argument("LaplacianMinor: removed vertex out of range");
    }
    const int v = g.vertex_count;
    std::vector<std::map<int, long>> dense(static_cast<std::size_t>(v));
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= v || b >= v) {
            throw std::invalid_argument("LaplacianMinor: edge endpoint out of range");
        }
        if (a == b) {
            continue;
        }
        dense[a][a] += 1;
        dense[b][b] += 1;
        dense[a][b] -= 1;
        dense[b][a] -= 1;
    }
    // Vertex x maps to minor index x, or x-1 past the removed vertex.
    const auto shift = [removed_vertex](int x) { return x < removed_vertex ? x : x - 1; };

    LaplacianMinor m;
    m.rows_.resize(static_cast<std::size_t>(v - 1));
    for (int r = 0; r < v; ++r) {
        if (r == removed_vertex) {
            continue;
        }
        auto& row = m.rows_[static_cast<std::size_t>(shift(r))];
        for (auto [c, val] : dense[static_cast<std::size_t>(r)]) {
            if (c != removed_vertex && val != 0) {
                row.emplace_back(shift(c), BigCount(val));
            }
        }
    }
    return m;
}

BigCount LaplacianMinor::entry(int row, int col) const {
    if (row < 0 || col < 0 || row >= order() || col >= order()) {
        throw std::out_of_range("LaplacianMinor::entry: index out of range");
    }
    const auto& r = rows_[static_cast<std::size_t>(row)];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return it != r.end() && it->first == col ? it->second : BigCount(0);
}

BigCount LaplacianMinor::determinant() const {
    const int m = order();
    if (m == 0) {
        return 1;
    }
    std::vector<SparseRow> rows = rows_;
    // stage[i] = number of elimination steps the stored values of row i reflect.
    std::vector<int> stage(static_cast<std::size_t>(m), 0);
    // pivots[s] = p_{s-1}, with p_{-1} = 1.
    std::vector<BigCount> pivots{BigCount(1)};
    pivots.reserve(static_cast<std::size_t>(m) + 1);

    const auto bring_to = [&](int i, int k) {
        auto& s = stage[static_cast<std::size_t>(i)];
        if (s == k) {
            return;
        }
        const BigCount& num = pivots[static_cast<std::size_t>(k)];
        const BigCount& den = pivots[static_cast<std::size_t>(s)];
        for (auto& [c, val] : rows[static_cast<std::size_t>(i)]) {
            val *= num;
            mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), den.get_mpz_t());
        }
        s = k;
    };
    const auto value_at = [&](const SparseRow& r, int col) -> BigCount {
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const auto& e, int c) { return e.first < c; });
        return it != r.end() && it->first == col ? it->second : BigCount(0);
    };

    BigCount scratch;
    for (int k = 0; k < m; ++k) {
        bring_to(k, k);
        const SparseRow& pivot_row = rows[static_cast<std::size_t>(k)];
        const BigCount pivot = value_at(pivot_row, k);
        if (pivot == 0) {
            return 0;
        }
        if (k == m - 1) {
            return pivot;
        }
        const BigCount& prev = pivots[static_cast<std::size_t>(k)];

        for (const auto& [j, unused] : pivot_row) {
            if (j <= k) {
                continue;
            }
            bring_to(j, k);
            SparseRow& target = rows[static_cast<std::size_t>(j)];
            const BigCount factor = value_at(target, k);

            SparseRow updated;
            updated.reserve(target.size() + pivot_row.size());
            auto a = target.begin();
            auto b = pivot_row.begin();
            while (a != target.end() || b != pivot_row.end()) {
                const int ca = a != target.end() ? a->first : m;
                const int cb = b != pivot_row.end() ? b->first : m;
                const int c = std::min(ca, cb);
                scratch = 0;
                if (ca == c) {
                    scratch = pivot * a->second;
                    ++a;
                }
                if (cb == c) {
                    scratch -= factor * b->second;
                    ++b;
                }
                if (c <= k || scratch == 0) {
                    continue;
                }
                mpz_divexact(scratch.get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
                updated.emplace_back(c, scratch);
            }
            target = std::move(updated);
            stage[static_cast<std::size_t>(j)] = k + 1;
        }
        pivots.push_back(pivot);
    }
    return 0;  // unreachable
}

}  // namespace sqc
