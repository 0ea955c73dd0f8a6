#include "sqc/treecount.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "sqc/fibonacci.hpp"
#include "sqc/laplacian.hpp"

namespace sqc {

namespace {

// Union-find with union by size and no path compression, so unions can be undone.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        for (int i = 0; i < n; ++i) {
            parent_[static_cast<std::size_t>(i)] = i;
        }
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
            std::swap(a, b);
        }
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return true;
    }

    void undo() {
        const int b = history_.back();
        history_.pop_back();
        const int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

class TreeSearch {
public:
    TreeSearch(const EdgeSet& g, const TreeVisitor& visit)
        : n_(g.n()), edges_(g.positions()), uf_(g.n()), current_(g.n()), visit_(visit) {
        for (int p : edges_) {
            ends_.push_back(EdgeId::from_position(n_, p).endpoints());
        }
    }

    /// Trees whose smallest edge is edges_[first].
    void run_from(std::size_t first) {
        if (n_ - 1 <= 0 || first >= edges_.size()) {
            return;
        }
        take(first, 1);
    }

    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

private:
    void take(std::size_t idx, int chosen) {
        const auto [a, b] = ends_[idx];
        if (!uf_.unite(a, b)) {
            return;
        }
        current_.insert(edges_[idx]);
        if (chosen == n_ - 1) {
            visit_(current_);
        } else {
            extend(idx + 1, chosen);
        }
        current_.erase(edges_[idx]);
        uf_.undo();
    }

    void extend(std::size_t from, int chosen) {
        const int needed = n_ - 1 - chosen;
        for (std::size_t idx = from; idx + static_cast<std::size_t>(needed) <= edges_.size(); ++idx) {
            take(idx, chosen + 1);
        }
    }

    int n_;
    std::vector<int> edges_;
    std::vector<std::pair<int, int>> ends_;
    RollbackUnionFind uf_;
    EdgeSet current_;
    const TreeVisitor& visit_;
};

void require_enumerable(int n) {
    if (n < kMinCycleLength || n > kMaxTreeEnumerationN) {
        throw std::out_of_range("spanning-tree enumeration supports 5 <= n <= 12, got n=" + std::to_string(n));
    }
}

}  // namespace

BigCount count_matrix_tree(const SimpleGraph& g) {
    return LaplacianMinor::of(g, 0).determinant();
}

BigCount count_matrix_tree(const EdgeSet& g) {
    return count_matrix_tree(to_simple_graph(g));
}

BigCount count_matrix_tree(const StripGraph& g) {
    return count_matrix_tree(g.to_simple_graph());
}

BigCount count_formula(int n) {
    if (n < kMinCycleLength) {
        throw std::domain_error("count_formula: n must be >= 5, got " + std::to_string(n));
    }
    const BigCount f = fib(static_cast<std::size_t>(n));
    return BigCount(n) * f * f;
}

BigCount count_strip(int m) {
    if (m <= 0) {
        throw std::domain_error("count_strip: m must be positive, got " + std::to_string(m));
    }
    if (m == 1) {
        return 1;
    }
    return fib(static_cast<std::size_t>(2 * m - 2));
}

BigCount count_strip_with_tails(int n, int k, std::int64_t j) {
    static_cast<void>(escape_route(n, k, j));  // validates (n, k)
    return count_strip(n - 2 * k);
}

void enumerate_spanning_trees(const EdgeSet& g, const TreeVisitor& visit) {
    require_enumerable(g.n());
    TreeSearch search(g, visit);
    for (std::size_t first = 0; first < search.edge_count(); ++first) {
        search.run_from(first);
    }
}

std::vector<EdgeSet> spanning_trees(const EdgeSet& g) {
    std::vector<EdgeSet> out;
    enumerate_spanning_trees(g, [&out](const EdgeSet& t) { out.push_back(t); });
    return out;
}

DecomposeTable decompose(int n, int jobs) {
    require_enumerable(n);
    const EdgeSet full = square_cycle(n);
    const int kmax = max_escape_k(n);

    struct Strip {
        int j;
        int k;
        EdgeSet edges;
    };
    std::vector<Strip> strips;
    for (int k = 0; k <= kmax; ++k) {
        for (int j = 0; j < n; ++j) {
            strips.push_back({j, k, strip_with_tails(n, k, j)});
        }
    }
    const auto cell_index = [n](int j, int k) { return static_cast<std::size_t>(k * n + j); };

    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto work = [&](std::size_t first_lo, std::size_t stride, std::vector<std::uint64_t>& tally) {
        tally.assign(strips.size(), 0);
        const TreeVisitor classify_tree = [&](const EdgeSet& tree) {
            const EdgeSet hull = closure(tree);
            std::optional<ConvexLabel> label;
            try {
                label = classify(hull);
            } catch (const std::invalid_argument& e) {
                throw FalsificationError(std::string("closure of spanning tree rejected: ") + e.what(), tree);
            }
            if (!label || label->is_trivial()) {
                throw FalsificationError("closure of spanning tree is " +
                                             (label ? label->to_string() : std::string("not in catalog")),
                                         tree);
            }
            int containing = 0;
            for (const auto& s : strips) {
                if (tree.is_subset_of(s.edges)) {
                    ++containing;
                    if (s.j != label->j || s.k != label->k) {
                        throw FalsificationError("spanning tree lies in a strip other than its closure", tree);
                    }
                }
            }
            if (containing != 1) {
                throw FalsificationError("spanning tree lies in " + std::to_string(containing) + " strips", tree);
            }
            ++tally[cell_index(label->j, label->k)];
        };
        try {
            TreeSearch search(full, classify_tree);
            for (std::size_t first = first_lo; first < search.edge_count(); first += stride) {
                search.run_from(first);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
    std::vector<std::vector<std::uint64_t>> tallies(workers);
    if (workers == 1) {
        work(0, 1, tallies[0]);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&work, &tallies, w, workers] { work(w, workers, tallies[w]); });
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    DecomposeTable table;
    table.n = n;
    table.total = 0;
    for (const auto& s : strips) {
        std::uint64_t c = 0;
        for (const auto& t : tallies) {
            c += t[cell_index(s.j, s.k)];
        }
        table.cells.push_back({s.j, s.k, BigCount(static_cast<unsigned long>(c))});
        table.total += table.cells.back().count;
    }
    return table;
}

}  // namespace sqc
