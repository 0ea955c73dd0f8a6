#pragma once

#include <compare>
#include <cstdint>

namespace sqc {

/// A residue modulo n. Arithmetic with plain integers wraps around.
class CyclicIndex {
public:
    /// Reduces `value` into [0, modulus). Throws std::invalid_argument if modulus <= 0.
    CyclicIndex(std::int64_t value, int modulus);

    [[nodiscard]] int value() const noexcept { return value_; }
    [[nodiscard]] int modulus() const noexcept { return modulus_; }

    friend CyclicIndex operator+(CyclicIndex a, std::int64_t d) { return {a.value_ + d, a.modulus_}; }
    friend CyclicIndex operator-(CyclicIndex a, std::int64_t d) { return {a.value_ - d, a.modulus_}; }

    CyclicIndex& operator+=(std::int64_t d) { return *this = *this + d; }
    CyclicIndex& operator-=(std::int64_t d) { return *this = *this - d; }

    friend bool operator==(const CyclicIndex&, const CyclicIndex&) = default;
    friend auto operator<=>(const CyclicIndex&, const CyclicIndex&) = default;

private:
    int value_;
    int modulus_;
};

/// Mathematical modulus: result always lies in [0, m).
[[nodiscard]] constexpr int mod(std::int64_t value, int m) noexcept {
    const auto r = value % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace sqc
