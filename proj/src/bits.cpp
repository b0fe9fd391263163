#include "codedbft/bits.hpp"

#include <stdexcept>

namespace codedbft {

namespace {
int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

Bits Bits::from_hex(std::string_view hex, size_t nbits) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    const size_t need = (nbits + 3) / 4;
    if (hex.size() != need)
        throw std::invalid_argument("hex literal has " + std::to_string(hex.size()) +
                                    " nibbles, expected " + std::to_string(need) + " for " +
                                    std::to_string(nbits) + " bits");
    Bits b(nbits);
    for (size_t d = 0; d < hex.size(); ++d) {
        int v = hex_digit(hex[d]);
        if (v < 0) throw std::invalid_argument("bad hex digit in bit string literal");
        for (int k = 0; k < 4; ++k) {
            size_t i = d * 4 + static_cast<size_t>(k);
            bool bit = (v >> (3 - k)) & 1;
            if (i < nbits) {
                b.set(i, bit);
            } else if (bit) {
                throw std::invalid_argument("nonzero pad bits in bit string literal");
            }
        }
    }
    return b;
}

Bits Bits::random(size_t nbits, std::mt19937_64& rng) {
    Bits b(nbits);
    for (auto& w : b.w_) w = rng();
    if (nbits % 64) b.w_.back() &= (uint64_t{1} << (nbits % 64)) - 1;
    return b;
}

bool Bits::get(size_t i) const {
    if (i >= n_) throw std::out_of_range("Bits::get");
    return (w_[i / 64] >> (i % 64)) & 1;
}

void Bits::set(size_t i, bool v) {
    if (i >= n_) throw std::out_of_range("Bits::set");
    uint64_t mask = uint64_t{1} << (i % 64);
    if (v)
        w_[i / 64] |= mask;
    else
        w_[i / 64] &= ~mask;
}

Bits Bits::slice(size_t pos, size_t len) const {
    if (pos + len > n_) throw std::out_of_range("Bits::slice");
    Bits out(len);
    for (size_t i = 0; i < len; ++i) out.set(i, get(pos + i));
    return out;
}

void Bits::append(const Bits& other) {
    size_t base = n_;
    n_ += other.n_;
    w_.resize((n_ + 63) / 64, 0);
    for (size_t i = 0; i < other.n_; ++i) set(base + i, other.get(i));
}

void Bits::append_bit(bool b) {
    ++n_;
    w_.resize((n_ + 63) / 64, 0);
    set(n_ - 1, b);
}

std::string Bits::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve((n_ + 3) / 4);
    for (size_t d = 0; d * 4 < n_; ++d) {
        int v = 0;
        for (int k = 0; k < 4; ++k) {
            size_t i = d * 4 + static_cast<size_t>(k);
            v = (v << 1) | (i < n_ && get(i) ? 1 : 0);
        }
        s.push_back(digits[v]);
    }
    return s;
}

int Bits::compare(const Bits& a, const Bits& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Bits::compare length mismatch");
    for (size_t i = 0; i < a.n_; ++i) {
        bool x = a.get(i), y = b.get(i);
        if (x != y) return x ? 1 : -1;
    }
    return 0;
}

uint64_t Bits::hash64() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= (v >> (k * 8)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(n_);
    for (uint64_t w : w_) mix(w);
    return h;
}

bool Bits::operator<(const Bits& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return compare(*this, o) < 0;
}

}  // namespace codedbft
