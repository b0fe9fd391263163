#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace codedbft {

/// Fixed-length bit string. Bit 0 is the most significant bit: the first
/// character of the hex form covers bits 0..3. Values, codeword symbols and
/// broadcast payloads are all carried as Bits.
class Bits {
  public:
    Bits() = default;
    explicit Bits(size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bits from_hex(std::string_view hex, size_t nbits);
    static Bits random(size_t nbits, std::mt19937_64& rng);

    size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(size_t i) const;
    void set(size_t i, bool v);

    Bits slice(size_t pos, size_t len) const;
    void append(const Bits& other);
    void append_bit(bool b);

    /// Hex with one nibble per 4 bits, zero padded at the tail when the
    /// length is not a multiple of 4.
    std::string to_hex() const;

    /// Lexicographic comparison as an unsigned big-endian integer; both
    /// operands must have the same length.
    static int compare(const Bits& a, const Bits& b);

    uint64_t hash64() const;  // FNV-1a, used for log digests

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    bool operator<(const Bits& o) const;  // size, then numeric

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;  // bit i lives at w_[i/64] bit (i%64)
};

}  // namespace codedbft
