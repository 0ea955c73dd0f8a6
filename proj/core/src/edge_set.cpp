#include "sqc/edge_set.hpp"

#include <bit>
#include <stdexcept>

namespace sqc {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int n) { return static_cast<std::size_t>((2 * n + kWordBits - 1) / kWordBits); }

}  // namespace

std::pair<int, int> EdgeId::endpoints() const noexcept {
    const int n = index.modulus();
    const int i = index.value();
    const int step = kind == EdgeKind::Frame ? 1 : 2;
    return {i, mod(i + step, n)};
}

EdgeId EdgeId::from_position(int n, int position) {
    if (position < 0 || position >= 2 * n) {
        throw std::out_of_range("EdgeId: position outside [0, 2n)");
    }
    return position < n ? frame(n, position) : window(n, position - n);
}

EdgeSet::EdgeSet(int n) : n_(n) {
    if (n < kMinCycleLength) {
        throw std::domain_error("EdgeSet: square cycle requires n >= 5, got " + std::to_string(n));
    }
    words_.assign(word_count(n), 0);
}

EdgeSet EdgeSet::from_mask(int n, std::uint64_t mask) {
    EdgeSet s(n);
    if (2 * n > kWordBits) {
        throw std::invalid_argument("EdgeSet::from_mask: 2n exceeds 64 bits");
    }
    if (2 * n < kWordBits && (mask >> (2 * n)) != 0) {
        throw std::invalid_argument("EdgeSet::from_mask: bits set beyond 2n");
    }
    s.words_[0] = mask;
    return s;
}

EdgeSet EdgeSet::from_positions(int n, const std::vector<int>& positions) {
    EdgeSet s(n);
    for (int p : positions) {
        s.insert(p);
    }
    return s;
}

EdgeSet EdgeSet::from_edges(int n, const std::vector<EdgeId>& edges) {
    EdgeSet s(n);
    for (const auto& e : edges) {
        if (e.index.modulus() != n) {
            throw std::invalid_argument("EdgeSet::from_edges: edge belongs to a different n");
        }
        s.insert(e);
    }
    return s;
}

void EdgeSet::check_position(int position) const {
    if (position < 0 || position >= 2 * n_) {
        throw std::out_of_range("EdgeSet: position " + std::to_string(position) + " outside [0, 2n)");
    }
}

void EdgeSet::check_same_n(const EdgeSet& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("EdgeSet: operands have different n");
    }
}

bool EdgeSet::contains(int position) const {
    check_position(position);
    return (words_[position / kWordBits] >> (position % kWordBits)) & 1U;
}

void EdgeSet::insert(int position) {
    check_position(position);
    words_[position / kWordBits] |= std::uint64_t{1} << (position % kWordBits);
}

void EdgeSet::erase(int position) {
    check_position(position);
    words_[position / kWordBits] &= ~(std::uint64_t{1} << (position % kWordBits));
}

int EdgeSet::count() const noexcept {
    int total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
    check_same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
    check_same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
    check_same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
    check_same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
    check_same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
    }
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::vector<int> EdgeSet::positions() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w) * kWordBits + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<int> EdgeSet::frame_indices() const {
    std::vector<int> out;
    for (int p : positions()) {
        if (p < n_) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<int> EdgeSet::window_indices() const {
    std::vector<int> out;
    for (int p : positions()) {
        if (p >= n_) {
            out.push_back(p - n_);
        }
    }
    return out;
}

std::uint64_t EdgeSet::to_mask() const {
    if (2 * n_ > kWordBits) {
        throw std::invalid_argument("EdgeSet::to_mask: 2n exceeds 64 bits");
    }
    return words_[0];
}

std::string EdgeSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int p : positions()) {
        if (!first) {
            s += ',';
        }
        first = false;
        s += p < n_ ? 'e' : 'f';
        s += std::to_string(p < n_ ? p : p - n_);
    }
    s += '}';
    return s;
}

}  // namespace sqc
