#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cech {

/// Fixed-universe bitset used for point sets of a finite space.
/// All binary operations require operands over the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(std::size_t size) {
        Bitset b(size);
        for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset singleton(std::size_t size, std::size_t i) {
        Bitset b(size);
        b.set(i);
        return b;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Indices of set bits, ascending.
    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                unsigned tz = static_cast<unsigned>(__builtin_ctzll(bits));
                out.push_back(w * 64 + tz);
                bits &= bits - 1;
            }
        }
        return out;
    }

    static Bitset from_indices(std::size_t size, const std::vector<std::size_t>& idx) {
        Bitset b(size);
        for (auto i : idx) b.set(i);
        return b;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("point index out of range");
    }
    void check_same(const Bitset& o) const {
        if (size_ != o.size_) throw std::invalid_argument("bitset universe mismatch");
    }
    void trim() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cech
