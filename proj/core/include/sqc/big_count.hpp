#pragma once

#include <string>

#include <gmpxx.h>

namespace sqc {

/// Exact nonnegative integer for tree counts and Fibonacci numbers.
using BigCount = mpz_class;

[[nodiscard]] inline std::string to_decimal(const BigCount& v) { return v.get_str(10); }

}  // namespace sqc
