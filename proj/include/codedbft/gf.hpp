#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "codedbft/bits.hpp"

namespace codedbft {

/// Element of GF(2^m) in polynomial basis; word i holds coefficients of
/// x^(64i) .. x^(64i+63). Width is fixed by the owning Field.
struct Fe {
    std::vector<uint64_t> w;

    bool operator==(const Fe& o) const { return w == o.w; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
    bool operator<(const Fe& o) const;  // numeric, for deterministic ordering
};

/// GF(2^m) with a fixed reduction polynomial per m. The polynomial table is
/// the standard list of low-weight irreducibles; every entry is checked by
/// the unit tests with an independent irreducibility oracle.
class Field {
  public:
    explicit Field(unsigned m);

    unsigned bits() const { return m_; }
    size_t words() const { return words_; }
    uint64_t order_log2() const { return m_; }  // |field| = 2^m

    Fe zero() const { return Fe{std::vector<uint64_t>(words_, 0)}; }
    Fe one() const;
    Fe from_uint(uint64_t v) const;  // v must fit in m bits
    uint64_t to_uint(const Fe& a) const;  // requires m <= 64

    bool is_zero(const Fe& a) const;
    Fe add(const Fe& a, const Fe& b) const;  // == subtraction
    Fe mul(const Fe& a, const Fe& b) const;
    Fe inv(const Fe& a) const;  // throws on zero
    Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

    /// m-bit big-endian serialization inside message payloads and logs.
    Fe element_from_bits(const Bits& src, size_t pos) const;
    void element_to_bits(const Fe& a, Bits& dst, size_t pos) const;

    /// m -> exponents of the reduction polynomial besides x^m and 1.
    static const std::map<unsigned, std::vector<unsigned>>& reduction_table();

    bool operator==(const Field& o) const { return m_ == o.m_; }

  private:
    unsigned m_;
    size_t words_;
    std::vector<uint64_t> red_;  // reduction polynomial minus the x^m term
};

}  // namespace codedbft
