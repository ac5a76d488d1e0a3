#pragma once

#include <cstdint>
#include <vector>

#include "fqlab/digits.hpp"
#include "fqlab/gf.hpp"

namespace fqlab {

/// A field together with Pascal's triangle mod p up to q-1, shared by the binomial-sum
/// criteria. Implicitly constructible from a Field so one-off calls can pass the field.
class CriterionContext {
public:
    CriterionContext(Field field);  // NOLINT(google-explicit-constructor)

    const Field& field() const noexcept { return field_; }
    std::uint64_t q() const noexcept { return field_.q(); }
    std::uint32_t p() const noexcept { return field_.p(); }

    /// Ordinary binomial C(m, n) mod p for m <= q-1 (Pascal recurrence, no Lucas).
    Residue binom(std::uint64_t m, std::uint64_t n) const noexcept { return table_(m, n); }

private:
    Field field_;
    BinomialTable table_;
};

/// sum_{1<=i<=q-2} (-1)^i C(s, i) C((ki)*, (2ks)*) mod p, for 1 <= s <= q-2.
Residue sum_2_1(const CriterionContext& ctx, std::uint64_t k, std::uint64_t s);

/// gcd(k, q-1) = 1 and sum_2_1 vanishes for every s in 1..q-2.
bool fact21_criterion(const CriterionContext& ctx, std::uint64_t k);

/// sum_{2<=i<=q-2} (-1)^i C(row*, (k'i)*) C(i, 2s) mod p where row = k's, or
/// k'(s + (q-1)/2) when `half` is set.
Residue sum_3_x(const CriterionContext& ctx, std::uint64_t k_prime, std::uint64_t s, bool half);

/// gcd(k, q-1) = 1 and both families of sum_3_x vanish.
bool lemma31_criterion(const CriterionContext& ctx, std::uint64_t k);

struct SupportSplit {
    std::uint32_t x = 0;  // |supp(l) \ supp(p^t l)|
    std::uint32_t y = 0;  // |supp(l) ∩ supp(p^t l)|

    friend bool operator==(const SupportSplit&, const SupportSplit&) = default;
};

SupportSplit xy_params(std::uint64_t l, std::uint32_t t, std::uint32_t p, std::uint32_t e);

/// Left side of the shifted-row identity with s = (q-1)/2 - (u + v p^t).
/// Requires e >= 3, 1 <= t <= e-1, u, v <= (p-1)/2 and l with 0/1 digits, l != 0, not all ones.
Residue lemma32_lhs(const CriterionContext& ctx, std::uint64_t l, std::uint32_t t, std::uint32_t u,
                    std::uint32_t v);

/// Closed double sum over 0 <= a <= 2u, 0 <= b <= 2v; powers use 0^0 = 1.
Residue lemma32_rhs(std::uint32_t p, std::uint32_t x, std::uint32_t y, std::uint32_t u,
                    std::uint32_t v);

/// sum_{(p-1)/2 <= a, b <= p-1} (-1)^(a+b) C(a,h)^x C(b,h)^x C(a+b,p-1)^y C(p-1,a) C(p-1,b),
/// h = (p-1)/2.
Residue proof_sum_319(std::uint32_t p, std::uint32_t x, std::uint32_t y);

/// Exponents l in [1, q-1] whose digits are all 0 or 1, excluding the all-ones vector.
std::vector<std::uint64_t> binary_exponents(std::uint32_t p, std::uint32_t e);

struct Lemma32Case {
    std::uint64_t l = 0;
    std::uint32_t t = 0;
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::uint64_t s = 0;
    SupportSplit split;
    Residue lhs = 0;
    Residue rhs = 0;
    bool complementary_shift = false;  // supp(l) and supp(p^t l) are disjoint and cover every digit

    bool holds() const noexcept { return lhs == rhs; }
    /// u = v = 0 puts the row exponent on a multiple of q-1.
    bool degenerate_row() const noexcept { return u == 0 && v == 0; }
};

/// Every admissible (l, t, u, v) in lexicographic order.
std::vector<Lemma32Case> lemma32_grid(const CriterionContext& ctx, unsigned jobs = 1);

}  // namespace fqlab
