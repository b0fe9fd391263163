#include "codedbft/gf.hpp"

#include <stdexcept>

namespace codedbft {

namespace {

// Polynomials over GF(2) as word vectors, degree tracked on the side.
// Only used for the extended Euclid inverse.
int poly_degree(const std::vector<uint64_t>& p) {
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(p[i]));
    }
    return -1;
}

void poly_xor_shifted(std::vector<uint64_t>& a, const std::vector<uint64_t>& b, int shift) {
    int word_shift = shift / 64, bit_shift = shift % 64;
    size_t need = b.size() + static_cast<size_t>(word_shift) + 1;
    if (a.size() < need) a.resize(need, 0);
    for (size_t i = 0; i < b.size(); ++i) {
        if (!b[i]) continue;
        a[i + word_shift] ^= b[i] << bit_shift;
        if (bit_shift) a[i + word_shift + 1] ^= b[i] >> (64 - bit_shift);
    }
}

// a mod b, and quotient appended into q (as a polynomial).
void poly_divmod(std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                 std::vector<uint64_t>& q) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        int shift = da - db;
        poly_xor_shifted(a, b, shift);
        size_t qi = static_cast<size_t>(shift) / 64;
        if (q.size() <= qi) q.resize(qi + 1, 0);
        q[qi] ^= uint64_t{1} << (shift % 64);
        da = poly_degree(a);
    }
}

std::vector<uint64_t> poly_mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::vector<uint64_t> r(a.size() + b.size() + 1, 0);
    for (size_t i = 0; i < b.size(); ++i) {
        uint64_t w = b[i];
        while (w) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            poly_xor_shifted(r, a, static_cast<int>(i * 64) + bit);
        }
    }
    return r;
}

}  // namespace

bool Fe::operator<(const Fe& o) const {
    for (size_t i = w.size(); i-- > 0;) {
        if (w[i] != o.w[i]) return w[i] < o.w[i];
    }
    return false;
}

const std::map<unsigned, std::vector<unsigned>>& Field::reduction_table() {
    static const std::map<unsigned, std::vector<unsigned>> table = {
        {2, {1}},        {3, {1}},         {4, {1}},        {5, {2}},
        {6, {1}},        {7, {1}},         {8, {4, 3, 1}},  {9, {1}},
        {10, {3}},       {11, {2}},        {12, {3}},       {13, {4, 3, 1}},
        {14, {5}},       {15, {1}},        {16, {5, 3, 1}}, {32, {7, 3, 2}},
        {64, {4, 3, 1}}, {128, {7, 2, 1}}, {256, {10, 5, 2}},
        {512, {8, 5, 2}}, {1024, {19, 6, 1}},
    };
    return table;
}

Field::Field(unsigned m) : m_(m), words_((m + 63) / 64) {
    auto it = reduction_table().find(m);
    if (it == reduction_table().end())
        throw std::invalid_argument("no reduction polynomial on record for GF(2^" +
                                    std::to_string(m) + ")");
    red_.assign(words_, 0);
    red_[0] |= 1;
    for (unsigned e : it->second) red_[e / 64] |= uint64_t{1} << (e % 64);
}

Fe Field::one() const {
    Fe a = zero();
    a.w[0] = 1;
    return a;
}

Fe Field::from_uint(uint64_t v) const {
    if (m_ < 64 && (v >> m_) != 0)
        throw std::invalid_argument("value does not fit in GF(2^" + std::to_string(m_) + ")");
    Fe a = zero();
    a.w[0] = v;
    return a;
}

uint64_t Field::to_uint(const Fe& a) const {
    if (m_ > 64) throw std::logic_error("to_uint on wide field element");
    return a.w[0];
}

bool Field::is_zero(const Fe& a) const {
    for (uint64_t w : a.w)
        if (w) return false;
    return true;
}

Fe Field::add(const Fe& a, const Fe& b) const {
    Fe r = a;
    for (size_t i = 0; i < words_; ++i) r.w[i] ^= b.w[i];
    return r;
}

Fe Field::mul(const Fe& a, const Fe& b) const {
    // MSB-first shift-and-add with on-the-fly reduction; acc stays below x^m.
    Fe acc = zero();
    const unsigned top_word = (m_ - 1) / 64, top_bit = (m_ - 1) % 64;
    for (unsigned i = m_; i-- > 0;) {
        bool carry = (acc.w[top_word] >> top_bit) & 1;
        for (size_t w = words_; w-- > 1;) acc.w[w] = (acc.w[w] << 1) | (acc.w[w - 1] >> 63);
        acc.w[0] <<= 1;
        if (m_ % 64) acc.w[top_word] &= (uint64_t{1} << (m_ % 64)) - 1;
        if (carry)
            for (size_t w = 0; w < words_; ++w) acc.w[w] ^= red_[w];
        if ((b.w[i / 64] >> (i % 64)) & 1)
            for (size_t w = 0; w < words_; ++w) acc.w[w] ^= a.w[w];
    }
    return acc;
}

Fe Field::inv(const Fe& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero field element");
    // Extended Euclid on (f, a) over GF(2)[x].
    std::vector<uint64_t> r0 = red_;
    r0.resize(words_ + 1, 0);
    r0[m_ / 64] ^= uint64_t{1} << (m_ % 64);  // full reduction polynomial
    std::vector<uint64_t> r1 = a.w;
    std::vector<uint64_t> t0(1, 0), t1(1, 1);
    while (poly_degree(r1) > 0) {
        std::vector<uint64_t> q;
        poly_divmod(r0, r1, q);       // r0 <- r0 mod r1
        std::swap(r0, r1);            // (r0, r1) = (r1, r0 mod r1)
        auto qt = poly_mul(q, t1);
        if (qt.size() < t0.size()) qt.resize(t0.size(), 0);
        for (size_t i = 0; i < t0.size(); ++i) qt[i] ^= t0[i];
        t0 = std::move(t1);
        t1 = std::move(qt);
    }
    if (poly_degree(r1) != 0) throw std::logic_error("reduction polynomial not irreducible");
    Fe out = zero();
    for (size_t i = 0; i < words_ && i < t1.size(); ++i) out.w[i] = t1[i];
    return out;
}

Fe Field::element_from_bits(const Bits& src, size_t pos) const {
    Fe a = zero();
    for (unsigned i = 0; i < m_; ++i) {
        if (src.get(pos + i)) {
            unsigned coeff = m_ - 1 - i;  // leading bit = highest coefficient
            a.w[coeff / 64] |= uint64_t{1} << (coeff % 64);
        }
    }
    return a;
}

void Field::element_to_bits(const Fe& a, Bits& dst, size_t pos) const {
    for (unsigned i = 0; i < m_; ++i) {
        unsigned coeff = m_ - 1 - i;
        dst.set(pos + i, (a.w[coeff / 64] >> (coeff % 64)) & 1);
    }
}

}  // namespace codedbft
