#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fcax {

// Fixed-universe dynamic bitset. Binary operations require both operands to
// share the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe)
        : size_(universe), words_(word_count(universe), 0) {}

    static Bitset full(std::size_t universe) {
        Bitset b(universe);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    // Interprets bit i of `mask` as element i. Universe must be <= 64.
    static Bitset from_mask(std::size_t universe, std::uint64_t mask) {
        assert(universe <= 64);
        Bitset b(universe);
        if (!b.words_.empty()) {
            b.words_[0] = mask;
            b.trim();
        }
        return b;
    }

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset&) const = default;

    bool is_subset_of(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Orders sets by their smallest differing element: the set that contains
    // it comes first. Total order on equal universes.
    int lex_compare(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ o.words_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (words_[i] & low) ? -1 : 1;
            }
        }
        return 0;
    }
    bool operator<(const Bitset& o) const { return lex_compare(o) < 0; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Low 64 bits as an integer mask. Universe must be <= 64.
    std::uint64_t as_mask() const {
        assert(size_ <= 64);
        return words_.empty() ? 0 : words_[0];
    }

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace fcax
