#include "sqc/convexity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <thread>

namespace sqc {

namespace {

int present_count(const EdgeSet& g, const Triangle& t) {
    int c = 0;
    for (const auto& e : t.members) {
        c += g.contains(e) ? 1 : 0;
    }
    return c;
}

// Bit-mask kernels for 2n <= 64.

struct MaskModel {
    int n;
    std::vector<std::uint64_t> triangles;
    // Endpoint bitmasks of each edge position, for connectivity.
    std::vector<std::pair<int, int>> ends;

    explicit MaskModel(int n_) : n(n_) {
        for (int i = 0; i < n; ++i) {
            triangles.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << mod(i + 1, n)) |
                                (std::uint64_t{1} << (n + i)));
        }
        for (int p = 0; p < 2 * n; ++p) {
            ends.push_back(EdgeId::from_position(n, p).endpoints());
        }
    }

    [[nodiscard]] bool convex(std::uint64_t mask) const {
        return std::none_of(triangles.begin(), triangles.end(),
                            [mask](std::uint64_t t) { return std::popcount(mask & t) == 2; });
    }

    [[nodiscard]] bool connected(std::uint64_t mask) const {
        // Grow the component of vertex 0 until stable.
        std::uint32_t reached = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            auto bits = mask;
            while (bits != 0) {
                const int p = std::countr_zero(bits);
                bits &= bits - 1;
                const auto [a, b] = ends[static_cast<std::size_t>(p)];
                const bool in_a = (reached >> a) & 1U;
                const bool in_b = (reached >> b) & 1U;
                if (in_a != in_b) {
                    reached |= (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
                    grew = true;
                }
            }
        }
        return reached == (std::uint32_t{1} << n) - 1;
    }
};

void collect_for_frames(const MaskModel& model, std::uint64_t frame_lo, std::uint64_t frame_hi,
                        std::vector<std::uint64_t>& out) {
    const int n = model.n;
    for (std::uint64_t frames = frame_lo; frames < frame_hi; ++frames) {
        std::uint64_t forced = 0;
        std::vector<int> free_windows;
        for (int i = 0; i < n; ++i) {
            const bool a = (frames >> i) & 1U;
            const bool b = (frames >> mod(i + 1, n)) & 1U;
            if (a && b) {
                forced |= std::uint64_t{1} << (n + i);
            } else if (!a && !b) {
                free_windows.push_back(n + i);
            }
        }
        const std::uint64_t choices = std::uint64_t{1} << free_windows.size();
        for (std::uint64_t c = 0; c < choices; ++c) {
            std::uint64_t mask = frames | forced;
            for (std::size_t b = 0; b < free_windows.size(); ++b) {
                if ((c >> b) & 1U) {
                    mask |= std::uint64_t{1} << free_windows[b];
                }
            }
            if (model.convex(mask) && model.connected(mask)) {
                out.push_back(mask);
            }
        }
    }
}

}  // namespace

EdgeSet ConvexLabel::to_edge_set(int n) const {
    switch (variant) {
        case Variant::TrivialFull:
            return square_cycle(n);
        case Variant::TrivialWindows:
            if (n % 2 == 0) {
                throw std::invalid_argument("ConvexLabel: window graph is only convex-connected for odd n");
            }
            return all_windows(n);
        case Variant::Strip:
            return strip_with_tails(n, k, j);
    }
    throw std::logic_error("ConvexLabel: bad variant");
}

std::string ConvexLabel::to_string() const {
    switch (variant) {
        case Variant::TrivialFull:
            return "full";
        case Variant::TrivialWindows:
            return "windows";
        case Variant::Strip:
            return "strip(j=" + std::to_string(j) + ",k=" + std::to_string(k) + ")";
    }
    return "?";
}

bool is_convex_wrt(const EdgeSet& g, const Triangle& t) {
    if (t.n() != g.n()) {
        throw std::invalid_argument("is_convex_wrt: triangle and edge set have different n");
    }
    const int c = present_count(g, t);
    return c <= 1 || c == 3;
}

bool is_convex(const EdgeSet& g) {
    for (int i = 0; i < g.n(); ++i) {
        if (!is_convex_wrt(g, triangle(g.n(), i))) {
            return false;
        }
    }
    return true;
}

EdgeSet closure(const EdgeSet& g) {
    const int n = g.n();
    EdgeSet hull = g;
    std::deque<int> queue;
    std::vector<bool> queued(static_cast<std::size_t>(n), true);
    for (int i = 0; i < n; ++i) {
        queue.push_back(i);
    }
    auto enqueue = [&](int i) {
        i = mod(i, n);
        if (!queued[static_cast<std::size_t>(i)]) {
            queued[static_cast<std::size_t>(i)] = true;
            queue.push_back(i);
        }
    };
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(i)] = false;
        const Triangle t = triangle(n, i);
        if (present_count(hull, t) != 2) {
            continue;
        }
        for (const auto& e : t.members) {
            if (hull.contains(e)) {
                continue;
            }
            hull.insert(e);
            if (e.kind == EdgeKind::Frame) {
                enqueue(e.index.value() - 1);
            }
            enqueue(e.index.value());
        }
    }
    return hull;
}

std::optional<ConvexLabel> classify(const EdgeSet& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("classify: input is not connected: " + g.to_string());
    }
    if (!is_convex(g)) {
        throw std::invalid_argument("classify: input is not convex: " + g.to_string());
    }
    const int n = g.n();
    const EdgeSet full = square_cycle(n);
    if (g == full) {
        return ConvexLabel::full();
    }
    if (n % 2 == 1 && g == all_windows(n)) {
        return ConvexLabel::windows();
    }
    // An escape route always contains f_j; scan j over the missing windows in
    // ascending order, then every admissible k.
    const EdgeSet missing = full - g;
    for (int j : missing.window_indices()) {
        for (int k = 0; k <= max_escape_k(n); ++k) {
            if (escape_route(n, k, j) == missing) {
                return ConvexLabel::strip(j, k);
            }
        }
    }
    return std::nullopt;
}

std::vector<EdgeSet> enumerate_convex(int n, int jobs) {
    if (n < kMinCycleLength || n > kMaxConvexEnumerationN) {
        throw std::out_of_range("enumerate_convex: n=" + std::to_string(n) + " outside [5, 14]");
    }
    const MaskModel model(n);
    const std::uint64_t frame_count = std::uint64_t{1} << n;
    const auto workers = static_cast<std::uint64_t>(std::clamp(jobs, 1, 64));

    std::vector<std::vector<std::uint64_t>> partial(workers);
    if (workers == 1) {
        collect_for_frames(model, 0, frame_count, partial[0]);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = frame_count * w / workers;
            const std::uint64_t hi = frame_count * (w + 1) / workers;
            threads.emplace_back([&model, &partial, w, lo, hi] { collect_for_frames(model, lo, hi, partial[w]); });
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    std::vector<std::uint64_t> masks;
    for (const auto& p : partial) {
        masks.insert(masks.end(), p.begin(), p.end());
    }
    std::sort(masks.begin(), masks.end());

    std::vector<EdgeSet> out;
    out.reserve(masks.size());
    for (auto m : masks) {
        EdgeSet g = EdgeSet::from_mask(n, m);
        if (!is_convex(g) || !is_connected(g)) {
            throw std::logic_error("enumerate_convex: mask kernel disagrees with EdgeSet predicates");
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::pair<ConvexLabel, EdgeSet>> convex_catalog(int n) {
    std::vector<std::pair<ConvexLabel, EdgeSet>> out;
    out.emplace_back(ConvexLabel::full(), square_cycle(n));
    if (n % 2 == 1) {
        out.emplace_back(ConvexLabel::windows(), all_windows(n));
    }
    for (int k = 0; k <= max_escape_k(n); ++k) {
        for (int j = 0; j < n; ++j) {
            out.emplace_back(ConvexLabel::strip(j, k), strip_with_tails(n, k, j));
        }
    }
    return out;
}

std::optional<std::pair<int, int>> find_frame_forcing_violation(const EdgeSet& g) {
    const int n = g.n();
    for (int k = 0; k < n; ++k) {
        for (int p = 0; p < n; ++p) {
            bool premise = g.contains(EdgeId::frame(n, k - 1)) && g.contains(EdgeId::frame(n, k + 2 * p));
            for (int q = 0; premise && q < p; ++q) {
                premise = g.contains(EdgeId::window(n, k + 2 * q));
            }
            if (!premise) {
                continue;
            }
            for (int i = k; i <= k + 2 * p - 1; ++i) {
                if (!g.contains(EdgeId::frame(n, i))) {
                    return std::pair{k, p};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace sqc
