#include "pspec/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace pspec {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector BitVector::from_bits(std::initializer_list<int> bits)
{
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1)
            throw std::invalid_argument("BitVector: entries must be 0 or 1");
        v.set(i++, b == 1);
    }
    return v;
}

BitVector BitVector::from_bits(std::span<const std::uint8_t> bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1)
            throw std::invalid_argument("BitVector: entries must be 0 or 1");
        v.set(i, bits[i] == 1);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view text)
{
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw std::invalid_argument("BitVector: expected a string of '0'/'1', got '" + std::string(text) + "'");
        v.set(i, text[i] == '1');
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    if (other.size_ != size_)
        throw std::invalid_argument("BitVector: size mismatch in xor");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVector::popcount() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::none() const noexcept
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

bool BitVector::dot(const BitVector& other, std::size_t len) const noexcept
{
    std::uint64_t acc = 0;
    const std::size_t full = len / 64;
    for (std::size_t w = 0; w < full; ++w)
        acc ^= words_[w] & other.words_[w];
    if (len & 63) {
        const std::uint64_t mask = (std::uint64_t{1} << (len & 63)) - 1;
        acc ^= words_[full] & other.words_[full] & mask;
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::prefix(std::size_t len) const
{
    if (len > size_)
        throw std::out_of_range("BitVector::prefix: length exceeds size");
    BitVector out(len);
    for (std::size_t w = 0; w < out.words_.size(); ++w)
        out.words_[w] = words_[w];
    if (len & 63)
        out.words_.back() &= (std::uint64_t{1} << (len & 63)) - 1;
    return out;
}

BitVector BitVector::appended(bool bit) const
{
    BitVector out(size_ + 1);
    for (std::size_t w = 0; w < words_.size(); ++w)
        out.words_[w] = words_[w];
    out.set(size_, bit);
    return out;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::size_t BitVector::hash() const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

} // namespace pspec
