#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqc/graph_core.hpp"

namespace sqc {
namespace {

EdgeSet edges_of(int n, std::initializer_list<const char*> names) {
    EdgeSet g(n);
    for (const char* name : names) {
        const int i = std::stoi(name + 1);
        g.insert(name[0] == 'e' ? EdgeId::frame(n, i) : EdgeId::window(n, i));
    }
    return g;
}

TEST(CyclicIndex, WrapsBothWays) {
    const CyclicIndex i(7, 5);
    EXPECT_EQ(i.value(), 2);
    EXPECT_EQ((i + 4).value(), 1);
    EXPECT_EQ((i - 3).value(), 4);
    EXPECT_EQ(CyclicIndex(-11, 5).value(), 4);
    EXPECT_EQ(CyclicIndex(0, 6), CyclicIndex(12, 6));
    EXPECT_THROW(CyclicIndex(1, 0), std::invalid_argument);
}

TEST(EdgeId, CanonicalAndEndpoints) {
    EXPECT_EQ(EdgeId::frame(6, 6), EdgeId::frame(6, 0));
    EXPECT_EQ(EdgeId::window(7, -1).position(), 7 + 6);
    EXPECT_EQ(EdgeId::frame(7, 6).endpoints(), (std::pair{6, 0}));
    EXPECT_EQ(EdgeId::window(7, 6).endpoints(), (std::pair{6, 1}));
    for (int p = 0; p < 14; ++p) {
        EXPECT_EQ(EdgeId::from_position(7, p).position(), p);
    }
}

TEST(EdgeSet, SetSemantics) {
    const EdgeSet a = edges_of(6, {"e0", "e1", "f2"});
    const EdgeSet b = edges_of(6, {"e1", "f2", "f5"});
    EXPECT_EQ((a | b).count(), 4);
    EXPECT_EQ(a & b, edges_of(6, {"e1", "f2"}));
    EXPECT_EQ(a - b, edges_of(6, {"e0"}));
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_FALSE(a.is_subset_of(b));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ(a.to_string(), "{e0,e1,f2}");
    EXPECT_THROW((void)(a | EdgeSet(7)), std::invalid_argument);
    EXPECT_THROW((void)a.contains(12), std::out_of_range);
}

TEST(EdgeSet, OrderingIsBitVectorValue) {
    for (std::uint64_t x : {0ULL, 3ULL, 100ULL, 4095ULL}) {
        for (std::uint64_t y : {0ULL, 5ULL, 64ULL, 4000ULL}) {
            EXPECT_EQ(EdgeSet::from_mask(6, x) < EdgeSet::from_mask(6, y), x < y);
        }
    }
    // Wider than one word.
    EdgeSet lo(40);
    EdgeSet hi(40);
    lo.insert(63);
    hi.insert(64);
    EXPECT_LT(lo, hi);
}

TEST(EdgeSet, RejectsShortCycles) {
    EXPECT_THROW(EdgeSet(4), std::domain_error);
    EXPECT_THROW((void)EdgeSet::from_mask(5, std::uint64_t{1} << 10), std::invalid_argument);
}

TEST(SquareCycle, K5AtNFive) {
    const EdgeSet g = square_cycle(5);
    EXPECT_EQ(g.count(), 10);
    std::set<std::pair<int, int>> pairs;
    for (int p : g.positions()) {
        auto [a, b] = EdgeId::from_position(5, p).endpoints();
        pairs.emplace(std::min(a, b), std::max(a, b));
    }
    EXPECT_EQ(pairs.size(), 10U);  // all C(5,2) pairs
}

TEST(SquareCycle, FourRegular) {
    const EdgeSet g = square_cycle(7);
    EXPECT_EQ(g.count(), 14);
    std::vector<int> degree(7, 0);
    for (auto [a, b] : to_simple_graph(g).edges) {
        ++degree[a];
        ++degree[b];
    }
    for (int d : degree) {
        EXPECT_EQ(d, 4);
    }
}

TEST(SquareCycle, RejectsNBelowFive) {
    EXPECT_THROW((void)square_cycle(4), std::domain_error);
    EXPECT_THROW((void)triangle(4, 0), std::domain_error);
}

TEST(Triangle, Members) {
    EXPECT_EQ(triangle(5, 0).as_edge_set(), edges_of(5, {"e0", "e1", "f0"}));
    EXPECT_EQ(triangle(5, 7).as_edge_set(), triangle(5, 2).as_edge_set());
    EXPECT_EQ(triangle(6, 5).as_edge_set(), edges_of(6, {"e5", "e0", "f5"}));
}

TEST(Triangle, CoverAndIncidence) {
    for (int n = 5; n <= 30; ++n) {
        EdgeSet u(n);
        std::vector<int> hits(static_cast<std::size_t>(2 * n), 0);
        for (int i = 0; i < n; ++i) {
            const auto t = triangle(n, i);
            u |= t.as_edge_set();
            for (int p : t.as_edge_set().positions()) {
                ++hits[static_cast<std::size_t>(p)];
            }
        }
        EXPECT_EQ(u, square_cycle(n));
        for (int p = 0; p < 2 * n; ++p) {
            EXPECT_EQ(hits[static_cast<std::size_t>(p)], p < n ? 2 : 1) << "n=" << n << " p=" << p;
        }
    }
}

TEST(StripGraph, SmallCases) {
    const auto s4 = strip_graph(4);
    EXPECT_EQ(s4.edges, (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    EXPECT_EQ(strip_graph(2).edges, (std::vector<std::pair<int, int>>{{1, 2}}));
    EXPECT_TRUE(strip_graph(1).edges.empty());
    EXPECT_THROW((void)strip_graph(0), std::domain_error);
    for (int k = 1; k <= 20; ++k) {
        EXPECT_EQ(static_cast<int>(strip_graph(k).edges.size()), (k - 1) + std::max(k - 2, 0));
    }
}

TEST(EscapeRoute, Examples) {
    EXPECT_EQ(escape_route(7, 0, 2), edges_of(7, {"f2", "f3", "e3"}));
    const EdgeSet collapsed = escape_route(5, 2, 0);
    EXPECT_EQ(collapsed, edges_of(5, {"f0", "e0", "e1", "e2", "e3", "e4"}));
    EXPECT_EQ(collapsed.count(), 6);
    EXPECT_EQ(square_cycle(5) - collapsed, all_windows(5) - edges_of(5, {"f0"}));
    EXPECT_EQ(escape_route(6, 2, 0), edges_of(6, {"f0", "f5", "e1", "e2", "e3", "e4", "e5"}));
}

TEST(EscapeRoute, SizeWithoutCollapse) {
    for (int n = 5; n <= 30; ++n) {
        for (int k = 0; k <= max_escape_k(n); ++k) {
            if (2 * k + 1 < n) {
                EXPECT_EQ(escape_route(n, k, 3).count(), 2 * k + 3);
            }
        }
    }
}

TEST(EscapeRoute, KRange) {
    EXPECT_EQ(max_escape_k(5), 2);
    EXPECT_EQ(max_escape_k(6), 2);
    EXPECT_EQ(max_escape_k(9), 4);
    EXPECT_THROW((void)escape_route(6, 3, 0), std::out_of_range);
    EXPECT_THROW((void)escape_route(6, -1, 0), std::out_of_range);
    EXPECT_THROW((void)strip_with_tails(7, 4, 0), std::out_of_range);
    EXPECT_EQ(escape_route(8, 1, -3), escape_route(8, 1, 5));
}

TEST(StripWithTails, Examples) {
    EXPECT_EQ(strip_with_tails(6, 2, 0).count(), 12 - 7);
    EXPECT_EQ(strip_with_tails(5, 2, 0), edges_of(5, {"f1", "f2", "f3", "f4"}));
    EXPECT_EQ(strip_with_tails(7, 0, 0), square_cycle(7) - edges_of(7, {"f0", "f1", "e1"}));
    EXPECT_EQ(strip_with_tails(7, 0, 0).count(), 11);
}

TEST(StripWithTails, PartitionConnectedDistinct) {
    for (int n = 5; n <= 30; ++n) {
        std::set<EdgeSet> seen;
        for (int k = 0; k <= max_escape_k(n); ++k) {
            for (int j = 0; j < n; ++j) {
                const EdgeSet s = strip_with_tails(n, k, j);
                const EdgeSet es = escape_route(n, k, j);
                EXPECT_EQ(s | es, square_cycle(n));
                EXPECT_FALSE(s.intersects(es));
                EXPECT_TRUE(is_connected(s)) << "n=" << n << " k=" << k << " j=" << j;
                EXPECT_TRUE(seen.insert(s).second) << "duplicate at n=" << n << " k=" << k << " j=" << j;
            }
        }
    }
}

TEST(IsConnected, Examples) {
    EXPECT_TRUE(is_connected(square_cycle(8)));
    EXPECT_FALSE(is_connected(all_windows(6)));
    EXPECT_TRUE(is_connected(all_windows(7)));
    EXPECT_FALSE(is_connected(EdgeSet(5)));
}

TEST(IsConnected, WindowsConnectedIffOdd) {
    for (int n = 5; n <= 30; ++n) {
        EXPECT_EQ(is_connected(all_windows(n)), n % 2 == 1) << n;
    }
}

TEST(IsConnected, AgreesWithBfsOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 20);
        const EdgeSet g = oracle::random_edge_set(n, 0.4, rng);
        std::vector<std::pair<int, int>> edges;
        for (int p : g.positions()) {
            edges.push_back(oracle::endpoints(n, p));
        }
        EXPECT_EQ(is_connected(g), oracle::connected(n, edges));
    }
}

}  // namespace
}  // namespace sqc
