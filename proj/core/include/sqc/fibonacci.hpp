#pragma once

#include <cstddef>
#include <vector>

#include "sqc/big_count.hpp"

namespace sqc {

/// F_i with F_0 = 0, F_1 = 1, by the recurrence.
[[nodiscard]] BigCount fib(std::size_t i);

/// F_0 .. F_last.
[[nodiscard]] std::vector<BigCount> fib_prefix(std::size_t last);

/// Checks the parity-split identity for F_n^2 exactly:
///   n even: F_n^2 = sum_{k=0}^{(n-2)/2} F_{4k+2}
///   n odd:  F_n^2 = 1 + sum_{k=1}^{(n-1)/2} F_{4k}
/// Throws std::domain_error if n < 2.
[[nodiscard]] bool fib_square_sum_identity(int n);

}  // namespace sqc
