#include "sqc/fibonacci.hpp"

#include <stdexcept>
#include <string>

namespace sqc {

BigCount fib(std::size_t i) {
    BigCount a = 0;
    BigCount b = 1;
    for (std::size_t s = 0; s < i; ++s) {
        a += b;
        swap(a, b);
    }
    return a;
}

std::vector<BigCount> fib_prefix(std::size_t last) {
    std::vector<BigCount> out;
    out.reserve(last + 1);
    out.emplace_back(0);
    if (last >= 1) {
        out.emplace_back(1);
    }
    for (std::size_t i = 2; i <= last; ++i) {
        out.emplace_back(out[i - 1] + out[i - 2]);
    }
    return out;
}

bool fib_square_sum_identity(int n) {
    if (n < 2) {
        throw std::domain_error("fib_square_sum_identity: n must be >= 2, got " + std::to_string(n));
    }
    const auto f = fib_prefix(static_cast<std::size_t>(2 * n + 2));
    const auto at = [&f](int i) -> const BigCount& { return f[static_cast<std::size_t>(i)]; };
    BigCount rhs = 0;
    if (n % 2 == 0) {
        for (int k = 0; k <= (n - 2) / 2; ++k) {
            rhs += at(4 * k + 2);
        }
    } else {
        rhs = 1;
        for (int k = 1; k <= (n - 1) / 2; ++k) {
            rhs += at(4 * k);
        }
    }
    return at(n) * at(n) == rhs;
}

}  // namespace sqc
