#include "sqc/cyclic_index.hpp"

#include <stdexcept>

namespace sqc {

CyclicIndex::CyclicIndex(std::int64_t value, int modulus) : value_(0), modulus_(modulus) {
    if (modulus <= 0) {
        throw std::invalid_argument("CyclicIndex: modulus must be positive");
    }
    value_ = mod(value, modulus);
}

}  // namespace sqc
