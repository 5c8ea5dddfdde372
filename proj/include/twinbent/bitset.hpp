#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace twinbent {

/// Fixed-width bit row backed by 64-bit words. Used for adjacency rows and
/// candidate sets so that intersections and counts are word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t num_words() const { return words_.size(); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all()
    {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear()
    {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Population count of (*this & other) without materializing it.
    std::size_t and_count(const Bitset& other) const
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return c;
    }

    Bitset& operator&=(const Bitset& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    /// this &= ~other
    Bitset& subtract(const Bitset& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const { return next(0); }

    /// Index of the lowest set bit at position >= from, or size() when none.
    std::size_t next(std::size_t from) const
    {
        if (from >= size_) return size_;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return size_;
            w = words_[k];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bitset&) const = default;

private:
    void trim()
    {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace twinbent
