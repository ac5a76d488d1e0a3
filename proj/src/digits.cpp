#include "fqlab/digits.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqlab/error.hpp"

namespace fqlab {

std::uint64_t DigitVector::value() const noexcept {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
    return v;
}

std::uint32_t DigitVector::digit_sum() const noexcept {
    return std::accumulate(digits.begin(), digits.end(), 0u);
}

std::uint64_t int_pow(std::uint64_t base, std::uint32_t exponent) noexcept {
    std::uint64_t r = 1;
    while (exponent--) r *= base;
    return r;
}

std::uint64_t star_reduce(std::uint64_t a, std::uint64_t q) noexcept {
    if (a == 0) return 0;
    const std::uint64_t r = a % (q - 1);
    return r == 0 ? q - 1 : r;
}

DigitVector digit_vector(std::uint64_t l, std::uint32_t p, std::uint32_t e) {
    DigitVector dv{p, e, std::vector<std::uint32_t>(e, 0)};
    std::uint64_t v = star_reduce(l, int_pow(p, e));
    for (auto& d : dv.digits) {
        d = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return dv;
}

std::vector<std::uint32_t> support(const DigitVector& dv) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < dv.digits.size(); ++i) {
        if (dv.digits[i] > 0) out.push_back(i);
    }
    return out;
}

DigitVector shift_class(std::uint64_t l, std::uint32_t t, std::uint32_t p, std::uint32_t e) {
    if (t >= e) throw Error(ErrorKind::ParamDomain, "shift must lie in 0..e-1");
    const std::uint64_t q = int_pow(p, e);
    // Reduce first so p^t * l* stays far from overflow.
    const std::uint64_t reduced = star_reduce(l, q);
    return digit_vector(star_reduce(reduced * int_pow(p, t), q), p, e);
}

Residue lucas_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    if (n > m) return 0;
    std::uint64_t result = 1;
    while (n > 0 || m > 0) {
        const std::uint64_t mi = m % p, ni = n % p;
        if (ni > mi) return 0;
        // C(mi, ni) mod p with mi < p: product formula with inverses mod p.
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t j = 0; j < ni; ++j) {
            num = num * (mi - j) % p;
            den = den * (j + 1) % p;
        }
        std::uint64_t den_inv = 1, base = den;
        for (std::uint64_t k = p - 2; k; k >>= 1) {
            if (k & 1) den_inv = den_inv * base % p;
            base = base * base % p;
        }
        result = result * num % p * den_inv % p;
        m /= p;
        n /= p;
    }
    return static_cast<Residue>(result);
}

Residue exact_binom_mod(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    if (n > m) return 0;
    if (n > m - n) n = m - n;
    if (m <= 64) {
        unsigned __int128 c = 1;
        for (std::uint64_t j = 1; j <= n; ++j) c = c * (m - n + j) / j;
        return static_cast<Residue>(c % p);
    }
    boost::multiprecision::cpp_int c = 1;
    for (std::uint64_t j = 1; j <= n; ++j) c = c * (m - n + j) / j;
    return static_cast<Residue>(c % p);
}

std::uint64_t mod_inverse(std::int64_t k, std::int64_t m) {
    if (m < 2) throw Error(ErrorKind::ParamDomain, "modulus must be at least 2");
    std::int64_t old_r = ((k % m) + m) % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quotient = old_r / r;
        old_r -= quotient * r;
        std::swap(old_r, r);
        old_s -= quotient * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw Error(ErrorKind::NotCoprime,
                    std::to_string(k) + " is not invertible modulo " + std::to_string(m));
    }
    return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

bool is_p_power(std::uint64_t k, const Field& field) {
    for (std::uint64_t power = 1, i = 0; i < field.e(); ++i, power *= field.p()) {
        if (k == power) return true;
    }
    return false;
}

bool digits_binary(std::uint64_t k_prime, std::uint32_t p, std::uint32_t e) {
    const DigitVector dv = digit_vector(k_prime, p, e);
    for (auto d : dv.digits) {
        if (d > 1) return false;
    }
    return true;
}

BinomialTable::BinomialTable(std::uint32_t p, std::uint32_t n_max)
    : n_max_(n_max), rows_(row_offset(std::uint64_t{n_max} + 1), 0) {
    for (std::uint64_t m = 0; m <= n_max; ++m) {
        const std::size_t row = row_offset(m), prev = m ? row_offset(m - 1) : 0;
        rows_[row] = 1 % p;
        rows_[row + m] = 1 % p;
        for (std::uint64_t n = 1; n < m; ++n) {
            rows_[row + n] = (rows_[prev + n - 1] + rows_[prev + n]) % p;
        }
    }
}

}  // namespace fqlab
