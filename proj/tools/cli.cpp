#include "cli.hpp"

#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "sqc/convexity.hpp"
#include "sqc/treecount.hpp"
#include "verify.hpp"

namespace sqc::cli {

namespace {

enum class Method { Formula, MatrixTree, Enumerate, Decompose };
enum class Format { Json, Csv };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require_range(int n, int lo, int hi, const std::string& what) {
    if (n < lo || n > hi) {
        throw UsageError(what + ": n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], got " + std::to_string(n));
    }
}

int cmd_count(int n, Method method, int jobs, std::ostream& out) {
    BigCount result;
    switch (method) {
        case Method::Formula:
            require_range(n, kMinCycleLength, 1'000'000, "count");
            result = count_formula(n);
            break;
        case Method::MatrixTree:
            require_range(n, kMinCycleLength, 1'000'000, "count");
            result = count_matrix_tree(square_cycle(n));
            break;
        case Method::Enumerate: {
            require_range(n, kMinCycleLength, kMaxTreeEnumerationN, "count --method enumerate");
            std::uint64_t c = 0;
            enumerate_spanning_trees(square_cycle(n), [&c](const EdgeSet&) { ++c; });
            result = BigCount(static_cast<unsigned long>(c));
            break;
        }
        case Method::Decompose:
            require_range(n, kMinCycleLength, kMaxTreeEnumerationN, "count --method decompose");
            result = decompose(n, jobs).total;
            break;
    }
    out << to_decimal(result) << '\n';
    return kExitPass;
}

int cmd_classify(int n, int jobs, std::ostream& out) {
    require_range(n, kMinCycleLength, kMaxConvexEnumerationN, "classify");
    Json doc;
    doc["n"] = n;
    doc["subgraphs"] = Json::array();
    bool falsified = false;
    for (const auto& g : enumerate_convex(n, jobs)) {
        const auto label = classify(g);
        falsified = falsified || !label;
        doc["subgraphs"].push_back({{"label", label ? to_json(*label) : Json(nullptr)}, {"edges", to_json(g)}});
    }
    doc["count"] = doc["subgraphs"].size();
    out << doc.dump() << '\n';
    return falsified ? kExitFalsified : kExitPass;
}

int cmd_decompose(int n, int jobs, std::ostream& out) {
    require_range(n, kMinCycleLength, kMaxTreeEnumerationN, "decompose");
    DecomposeTable table;
    try {
        table = decompose(n, jobs);
    } catch (const FalsificationError& e) {
        out << Json{{"error", e.what()}, {"witness", to_json(e.witness())}}.dump() << '\n';
        return kExitFalsified;
    }
    out << to_json(table).dump() << '\n';
    if (table.total != count_formula(n)) {
        out << Json{{"error", "total differs from n F_n^2"}, {"witness", {{"expected", to_decimal(count_formula(n))}}}}
                   .dump()
            << '\n';
        return kExitFalsified;
    }
    return kExitPass;
}

int cmd_verify(const VerifyOptions& opts, Format format, std::ostream& out) {
    try {
        validate(opts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto reports = run_claims(standard_claims(opts), opts.jobs);
    if (format == Format::Csv) {
        out << csv_header() << '\n';
    }
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.status == Status::Pass;
        out << (format == Format::Json ? to_json(r).dump() : to_csv_row(r)) << '\n';
    }
    return all_pass ? kExitPass : kExitFalsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Square-cycle structure checks: spanning-tree counts, convex subgraphs, tree partitions"};
    app.require_subcommand(0, 1);

    const std::map<std::string, Method> methods{{"formula", Method::Formula},
                                                {"matrix-tree", Method::MatrixTree},
                                                {"enumerate", Method::Enumerate},
                                                {"decompose", Method::Decompose}};
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

    int n = 0;
    int jobs = 1;
    Method method = Method::Formula;
    Format format = Format::Json;
    VerifyOptions verify_opts;

    auto* count = app.add_subcommand("count", "Print t(C_n^2) as a decimal integer");
    count->add_option("--n", n, "Cycle length")->required();
    count->add_option("--method", method, "formula | matrix-tree | enumerate | decompose")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    count->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand("classify", "List every connected spanning convex subgraph with its label");
    classify_cmd->add_option("--n", n, "Cycle length")->required();
    classify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* decompose_cmd = app.add_subcommand("decompose", "Tally spanning trees by the strip containing them");
    decompose_cmd->add_option("--n", n, "Cycle length")->required();
    decompose_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Run every check and emit one report per claim");
    verify_cmd->add_option("--small", verify_opts.n_max_small, "Upper n for enumeration-backed checks (<= 12)");
    verify_cmd->add_option("--large", verify_opts.n_max_large, "Upper n for counting checks (<= 1000)");
    verify_cmd->add_option("--format", format, "json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    verify_cmd->add_option("--jobs", verify_opts.jobs, "Claims checked concurrently")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            return cmd_count(n, method, jobs, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(n, jobs, out);
        }
        if (decompose_cmd->parsed()) {
            return cmd_decompose(n, jobs, out);
        }
        return cmd_verify(verify_opts, format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFalsified;
    }
}

}  // namespace sqc::cli
