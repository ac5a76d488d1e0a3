#pragma once

#include <cstdint>
#include <vector>

#include "fqlab/gf.hpp"

namespace fqlab {

/// A residue modulo a prime, always in {0, ..., p-1}.
using Residue = std::uint32_t;

/// Base-p digits of a star-reduced exponent, low digit first, padded to length e.
struct DigitVector {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::vector<std::uint32_t> digits;

    std::uint64_t value() const noexcept;
    std::uint32_t digit_sum() const noexcept;

    friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

std::uint64_t int_pow(std::uint64_t base, std::uint32_t exponent) noexcept;

/// a* : 0 stays 0, any other a goes to its representative mod q-1 in {1, ..., q-1}.
std::uint64_t star_reduce(std::uint64_t a, std::uint64_t q) noexcept;

DigitVector digit_vector(std::uint64_t l, std::uint32_t p, std::uint32_t e);

/// Positions carrying a nonzero digit, ascending.
std::vector<std::uint32_t> support(const DigitVector& dv);

/// Digits of (p^t l)*. For 1 <= l* <= q-2 this is the rotation sending index i-t to i.
DigitVector shift_class(std::uint64_t l, std::uint32_t t, std::uint32_t p, std::uint32_t e);

/// C(m, n) mod p via the product of digitwise binomials.
Residue lucas_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// Exact integer C(m, n) reduced mod p: 128-bit for m <= 64, arbitrary precision above.
Residue exact_binom_mod(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// k^{-1} mod m in {1, ..., m-1}; NotCoprime if gcd(k, m) != 1.
std::uint64_t mod_inverse(std::int64_t k, std::int64_t m);

/// k in {1, p, ..., p^(e-1)}.
bool is_p_power(std::uint64_t k, const Field& field);

/// Every base-p digit of k' is 0 or 1.
bool digits_binary(std::uint64_t k_prime, std::uint32_t p, std::uint32_t e);

/// Pascal's triangle mod p for 0 <= n <= m <= n_max.
class BinomialTable {
public:
    BinomialTable(std::uint32_t p, std::uint32_t n_max);

    Residue operator()(std::uint64_t m, std::uint64_t n) const noexcept {
        if (n > m || m > n_max_) return 0;
        return rows_[row_offset(m) + n];
    }

    std::uint32_t n_max() const noexcept { return n_max_; }

private:
    static std::size_t row_offset(std::uint64_t m) noexcept { return m * (m + 1) / 2; }

    std::uint32_t n_max_;
    std::vector<std::uint32_t> rows_;
};

}  // namespace fqlab
