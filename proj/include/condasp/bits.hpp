#ifndef CONDASP_BITS_HPP
#define CONDASP_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace condasp {

/// Fixed-width bitset sized at runtime. All operands of binary operations
/// must share one width. Used for atom sets in the solver hot paths.
class Bits {
  public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Bits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const Bits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    std::size_t count_and(const Bits& other) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            n += static_cast<std::size_t>(__builtin_popcountll(words_[i] & other.words_[i]));
        return n;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

  private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace condasp

#endif
