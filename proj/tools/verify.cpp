#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "sqc/fibonacci.hpp"
#include "sqc/graph_core.hpp"

namespace sqc::cli {

namespace {

Json mismatch(int n, const std::string& detail, const BigCount& expected, const BigCount& actual) {
    return Json{{"n", n},
                {"detail", detail},
                {"expected", to_decimal(expected)},
                {"actual", to_decimal(actual)}};
}

std::optional<Json> check_strip_tree_count(int lo, int hi) {
    for (int m = lo; m <= hi; ++m) {
        const BigCount actual = count_matrix_tree(strip_graph(m));
        const BigCount expected = fib(static_cast<std::size_t>(2 * m - 2));
        if (actual != expected) {
            return mismatch(m, "t(S_m) != F_{2m-2}", expected, actual);
        }
    }
    return std::nullopt;
}

std::optional<Json> check_fib_square_sum(int lo, int hi) {
    const auto f = fib_prefix(static_cast<std::size_t>(2 * hi + 2));
    for (std::size_t i = 0; i + 2 < f.size(); ++i) {
        if (f[i + 2] != f[i + 1] + f[i]) {
            return Json{{"n", i}, {"detail", "Fibonacci recurrence fails"}};
        }
    }
    for (int n = lo; n <= hi; ++n) {
        if (!fib_square_sum_identity(n)) {
            return Json{{"n", n}, {"detail", "F_n^2 parity-split sum identity fails"}};
        }
    }
    return std::nullopt;
}

std::optional<Json> check_tails_tree_count(int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        for (int k = 0; k <= max_escape_k(n); ++k) {
            const BigCount expected = count_strip(n - 2 * k);
            for (int j = 0; j < n; ++j) {
                const EdgeSet g = strip_with_tails(n, k, j);
                const BigCount actual = count_matrix_tree(g);
                if (actual != expected) {
                    Json w = mismatch(n, "t(S_{n,k,j}) != t(S_{n-2k})", expected, actual);
                    w["j"] = j;
                    w["k"] = k;
                    w["edges"] = to_json(g);
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Json> check_convex_catalog(int lo, int hi, int jobs) {
    for (int n = lo; n <= hi; ++n) {
        const auto found = enumerate_convex(n, jobs);
        for (const auto& g : found) {
            if (!classify(g)) {
                return Json{{"n", n}, {"detail", "convex subgraph not in catalog"}, {"edges", to_json(g)}};
            }
        }
        std::set<EdgeSet> expected;
        for (const auto& [label, g] : convex_catalog(n)) {
            if (!expected.insert(g).second) {
                return Json{{"n", n}, {"detail", "catalog entries coincide"}, {"label", to_json(label)}};
            }
        }
        const std::set<EdgeSet> actual(found.begin(), found.end());
        if (actual != expected) {
            for (const auto& g : expected) {
                if (!actual.count(g)) {
                    return Json{{"n", n}, {"detail", "catalog entry not found by search"}, {"edges", to_json(g)}};
                }
            }
            return Json{{"n", n}, {"detail", "search and catalog differ"}};
        }
    }
    return std::nullopt;
}

std::optional<Json> check_frame_forcing(int lo, int hi, int jobs) {
    for (int n = lo; n <= hi; ++n) {
        for (const auto& g : enumerate_convex(n, jobs)) {
            if (auto v = find_frame_forcing_violation(g)) {
                return Json{{"n", n},
                            {"detail", "frames not forced"},
                            {"k", v->first},
                            {"p", v->second},
                            {"edges", to_json(g)}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Json> check_tree_partition(int lo, int hi, int jobs) {
    for (int n = lo; n <= hi; ++n) {
        DecomposeTable table;
        try {
            table = decompose(n, jobs);
        } catch (const FalsificationError& e) {
            return Json{{"n", n}, {"detail", e.what()}, {"edges", to_json(e.witness())}};
        }
        for (const auto& c : table.cells) {
            const BigCount expected = count_strip(n - 2 * c.k);
            if (c.count != expected) {
                Json w = mismatch(n, "cell count != t(S_{n-2k})", expected, c.count);
                w["j"] = c.j;
                w["k"] = c.k;
                return w;
            }
        }
        if (table.total != count_formula(n)) {
            return mismatch(n, "tree total != n F_n^2", count_formula(n), table.total);
        }
    }
    return std::nullopt;
}

std::optional<Json> check_tree_count_formula(int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        const BigCount formula = count_formula(n);
        const BigCount actual = count_matrix_tree(square_cycle(n));
        if (actual != formula) {
            return mismatch(n, "matrix-tree count != n F_n^2", formula, actual);
        }
        BigCount column_sum = 0;
        for (int k = 0; k <= max_escape_k(n); ++k) {
            column_sum += BigCount(n) * count_strip(n - 2 * k);
        }
        if (column_sum != formula) {
            return mismatch(n, "sum_k n t(S_{n-2k}) != n F_n^2", formula, column_sum);
        }
    }
    return std::nullopt;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

VerificationReport run_one(const Claim& claim) {
    VerificationReport r;
    r.claim_id = claim.id;
    r.n_lo = claim.n_lo;
    r.n_hi = claim.n_hi;
    const auto start = std::chrono::steady_clock::now();
    std::optional<Json> witness;
    try {
        witness = claim.check(claim.n_lo, claim.n_hi);
    } catch (const std::exception& e) {
        witness = Json{{"detail", "exception"}, {"error", e.what()}};
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    r.status = witness ? Status::Fail : Status::Pass;
    r.witness = std::move(witness);
    return r;
}

}  // namespace

Json to_json(const VerificationReport& r) {
    Json j;
    j["claim_id"] = r.claim_id;
    j["n_lo"] = r.n_lo;
    j["n_hi"] = r.n_hi;
    j["status"] = r.status == Status::Pass ? "pass" : "fail";
    j["witness"] = r.witness ? *r.witness : Json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string csv_header() { return "claim_id,n_lo,n_hi,status,witness,elapsed_ms"; }

std::string to_csv_row(const VerificationReport& r) {
    return csv_escape(r.claim_id) + ',' + std::to_string(r.n_lo) + ',' + std::to_string(r.n_hi) + ',' +
           (r.status == Status::Pass ? "pass" : "fail") + ',' + (r.witness ? csv_escape(r.witness->dump()) : "") +
           ',' + std::to_string(r.elapsed_ms);
}

void validate(const VerifyOptions& opts) {
    if (opts.n_max_small < kMinCycleLength || opts.n_max_small > kMaxSmallN) {
        throw std::invalid_argument("--small must lie in [5, 12], got " + std::to_string(opts.n_max_small));
    }
    if (opts.n_max_large < kMinCycleLength || opts.n_max_large > kMaxLargeN) {
        throw std::invalid_argument("--large must lie in [5, 1000], got " + std::to_string(opts.n_max_large));
    }
    if (opts.jobs < 1) {
        throw std::invalid_argument("--jobs must be positive");
    }
}

std::vector<Claim> standard_claims(const VerifyOptions& opts) {
    validate(opts);
    const int small = opts.n_max_small;
    const int large = opts.n_max_large;
    // Parallelism is spent across claims, so each claim enumerates single-threaded.
    return {
        {"strip-tree-count", 2, large, check_strip_tree_count},
        {"fib-square-sum", 2, large, check_fib_square_sum},
        {"tails-tree-count", 5, small, check_tails_tree_count},
        {"convex-catalog", 5, small, [](int lo, int hi) { return check_convex_catalog(lo, hi, 1); }},
        {"frame-forcing", 5, small, [](int lo, int hi) { return check_frame_forcing(lo, hi, 1); }},
        {"tree-partition", 5, small, [](int lo, int hi) { return check_tree_partition(lo, hi, 1); }},
        {"tree-count-formula", 5, large, check_tree_count_formula},
    };
}

std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, int jobs) {
    std::vector<VerificationReport> reports(claims.size());
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), claims.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < claims.size(); ++i) {
            reports[i] = run_one(claims[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&] {
                for (std::size_t i = next++; i < claims.size(); i = next++) {
                    reports[i] = run_one(claims[i]);
                }
            });
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
    return reports;
}

}  // namespace sqc::cli
