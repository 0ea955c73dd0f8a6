#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace sqc::cli {

inline constexpr int kMaxSmallN = 12;
inline constexpr int kMaxLargeN = 1000;

enum class Status { Pass, Fail };

/// Outcome of checking one claim over an inclusive n range.
struct VerificationReport {
    std::string claim_id;
    int n_lo = 0;
    int n_hi = 0;
    Status status = Status::Pass;
    /// Present iff status == Fail.
    std::optional<Json> witness;
    std::int64_t elapsed_ms = 0;
};

/// {"claim_id", "n_lo", "n_hi", "status", "witness", "elapsed_ms"}
Json to_json(const VerificationReport& r);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);

/// A check returns a witness object on failure and std::nullopt on success.
struct Claim {
    std::string id;
    int n_lo = 0;
    int n_hi = 0;
    std::function<std::optional<Json>(int lo, int hi)> check;
};

struct VerifyOptions {
    int n_max_small = 8;
    int n_max_large = 100;
    int jobs = 1;
};

/// Throws std::invalid_argument unless 5 <= small <= 12, 5 <= large <= 1000, jobs >= 1.
void validate(const VerifyOptions& opts);

/// The standard claim list for the given ranges.
std::vector<Claim> standard_claims(const VerifyOptions& opts);

/// Runs claims (concurrently when jobs > 1) and returns reports sorted by claim id.
/// An exception escaping a check is recorded as a failure.
std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, int jobs);

}  // namespace sqc::cli
