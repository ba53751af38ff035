#ifndef SPECCOVER_BIT_ROW_HPP
#define SPECCOVER_BIT_ROW_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace speccover {

/// Fixed-length row of bits packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparisons and population counts need no masking.
class BitRow {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitRow() = default;
    explicit BitRow(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static constexpr std::size_t word_count(std::size_t size) noexcept {
        return (size + word_bits - 1) / word_bits;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t pos) const noexcept {
        return (words_[pos / word_bits] >> (pos % word_bits)) & 1u;
    }
    void set(std::size_t pos) noexcept { words_[pos / word_bits] |= mask(pos); }
    void reset(std::size_t pos) noexcept { words_[pos / word_bits] &= ~mask(pos); }
    void assign(std::size_t pos, bool value) noexcept { value ? set(pos) : reset(pos); }

    void set_all() noexcept {
        std::fill(words_.begin(), words_.end(), ~word_type{0});
        clear_tail();
    }

    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }
    bool any() const noexcept { return !none(); }

    bool all() const noexcept {
        if (words_.empty()) return true;
        for (std::size_t k = 0; k + 1 < words_.size(); ++k)
            if (words_[k] != ~word_type{0}) return false;
        return words_.back() == tail_mask();
    }

    std::size_t count() const noexcept {
        std::size_t total = 0;
        for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool intersects(const BitRow& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    /// Smallest set position, if any.
    std::optional<std::size_t> find_first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] != 0)
                return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return std::nullopt;
    }

    /// Smallest position set here and clear in `other`, if any.
    std::optional<std::size_t> find_first_outside(const BitRow& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            const word_type rest = words_[k] & ~other.words_[k];
            if (rest != 0) return k * word_bits + static_cast<std::size_t>(std::countr_zero(rest));
        }
        return std::nullopt;
    }

    /// Smallest clear position below `size()`, if any.
    std::optional<std::size_t> find_first_zero() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            const word_type live = (k + 1 == words_.size()) ? tail_mask() : ~word_type{0};
            const word_type holes = ~words_[k] & live;
            if (holes != 0) return k * word_bits + static_cast<std::size_t>(std::countr_zero(holes));
        }
        return std::nullopt;
    }

    BitRow& operator|=(const BitRow& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    std::span<const word_type> words() const noexcept { return words_; }
    std::span<word_type> words() noexcept { return words_; }

    void swap(BitRow& other) noexcept {
        std::swap(size_, other.size_);
        words_.swap(other.words_);
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    static constexpr word_type mask(std::size_t pos) noexcept {
        return word_type{1} << (pos % word_bits);
    }
    word_type tail_mask() const noexcept {
        const std::size_t rem = size_ % word_bits;
        return rem == 0 ? ~word_type{0} : (word_type{1} << rem) - 1;
    }
    void clear_tail() noexcept {
        if (!words_.empty()) words_.back() &= tail_mask();
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

inline void swap(BitRow& a, BitRow& b) noexcept { a.swap(b); }

}  // namespace speccover

#endif
