#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pspec {

/// Fixed-length vector over GF(2). Stored as packed 64-bit words; bits past
/// size() in the last word are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_bits(std::span<const std::uint8_t> bits);
    /// Parses a string of '0' / '1' characters.
    static BitVector from_string(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const noexcept { return get(i); }
    void set(std::size_t i, bool value) noexcept
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector& a, const BitVector& b)
    {
        return a.to_string() <=> b.to_string();
    }

    std::size_t popcount() const noexcept;
    bool none() const noexcept;
    /// Parity of popcount(this & other) over the first `len` bits.
    bool dot(const BitVector& other, std::size_t len) const noexcept;

    /// Copy of bits [0, len).
    BitVector prefix(std::size_t len) const;
    /// Vector of this length+1 with `bit` appended.
    BitVector appended(bool bit) const;

    std::string to_string() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pspec

template <>
struct std::hash<pspec::BitVector> {
    std::size_t operator()(const pspec::BitVector& v) const noexcept { return v.hash(); }
};
