#include "fqlab/criterion.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "fqlab/error.hpp"
#include "fqlab/parallel.hpp"

namespace fqlab {

namespace {

Residue reduce(std::int64_t acc, std::uint32_t p) {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<Residue>(((acc % m) + m) % m);
}

Residue pow_residue(Residue base, std::uint32_t exponent, std::uint32_t p) {
    std::uint64_t r = 1 % p;
    while (exponent--) r = r * base % p;
    return static_cast<Residue>(r);
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::ParamDomain, what);
}

}  // namespace

CriterionContext::CriterionContext(Field field)
    : field_(std::move(field)), table_(field_.p(), field_.q() - 1) {}

Residue sum_2_1(const CriterionContext& ctx, std::uint64_t k, std::uint64_t s) {
    const std::uint64_t q = ctx.q();
    const std::uint32_t p = ctx.p();
    require(k >= 1 && k <= q - 1, "k must lie in 1..q-1");
    require(s >= 1 && s <= q - 2, "s must lie in 1..q-2");
    const std::uint64_t col = star_reduce(2 * k * s, q);
    std::int64_t acc = 0;
    for (std::uint64_t i = 1; i <= q - 2; ++i) {
        const Residue outer = ctx.binom(s, i);
        if (outer == 0) continue;
        const Residue inner = lucas_binom(star_reduce(k * i, q), col, p);
        const std::int64_t term = static_cast<std::int64_t>(outer) * inner % p;
        acc += (i % 2 == 0) ? term : -term;
    }
    return reduce(acc, p);
}

bool fact21_criterion(const CriterionContext& ctx, std::uint64_t k) {
    const std::uint64_t q = ctx.q();
    if (std::gcd(k, q - 1) != 1) return false;
    for (std::uint64_t s = 1; s <= q - 2; ++s) {
        if (sum_2_1(ctx, k, s) != 0) return false;
    }
    return true;
}

Residue sum_3_x(const CriterionContext& ctx, std::uint64_t k_prime, std::uint64_t s, bool half) {
    const std::uint64_t q = ctx.q();
    const std::uint32_t p = ctx.p();
    const std::uint64_t h = (q - 1) / 2;
    require(std::gcd(k_prime, q - 1) == 1, "k' must be coprime to q-1");
    if (half) {
        require(s >= 1 && s < h, "s must lie in 1..(q-1)/2 - 1");
    } else {
        require(s >= 1 && s <= h, "s must lie in 1..(q-1)/2");
    }
    const std::uint64_t row = star_reduce(k_prime * (half ? s + h : s), q);
    std::int64_t acc = 0;
    for (std::uint64_t i = 2; i <= q - 2; ++i) {
        const Residue right = ctx.binom(i, 2 * s);
        if (right == 0) continue;
        const Residue left = lucas_binom(row, star_reduce(k_prime * i, q), p);
        const std::int64_t term = static_cast<std::int64_t>(left) * right % p;
        acc += (i % 2 == 0) ? term : -term;
    }
    return reduce(acc, p);
}

bool lemma31_criterion(const CriterionContext& ctx, std::uint64_t k) {
    const std::uint64_t q = ctx.q();
    if (std::gcd(k, q - 1) != 1) return false;
    const std::uint64_t k_prime = mod_inverse(static_cast<std::int64_t>(k),
                                              static_cast<std::int64_t>(q - 1));
    const std::uint64_t h = (q - 1) / 2;
    for (std::uint64_t s = 1; s <= h; ++s) {
        if (sum_3_x(ctx, k_prime, s, false) != 0) return false;
    }
    for (std::uint64_t s = 1; s < h; ++s) {
        if (sum_3_x(ctx, k_prime, s, true) != 0) return false;
    }
    return true;
}

SupportSplit xy_params(std::uint64_t l, std::uint32_t t, std::uint32_t p, std::uint32_t e) {
    const auto base = support(digit_vector(l, p, e));
    const auto shifted = support(shift_class(l, t, p, e));
    std::vector<std::uint32_t> common;
    std::set_intersection(base.begin(), base.end(), shifted.begin(), shifted.end(),
                          std::back_inserter(common));
    const auto y = static_cast<std::uint32_t>(common.size());
    return SupportSplit{static_cast<std::uint32_t>(base.size()) - y, y};
}

Residue lemma32_lhs(const CriterionContext& ctx, std::uint64_t l, std::uint32_t t, std::uint32_t u,
                    std::uint32_t v) {
    const Field& field = ctx.field();
    const std::uint32_t p = field.p(), e = field.e();
    const std::uint64_t q = ctx.q();
    require(e >= 3, "identity needs e >= 3");
    require(t >= 1 && t <= e - 1, "t must lie in 1..e-1");
    require(u <= (p - 1) / 2 && v <= (p - 1) / 2, "u and v must lie in 0..(p-1)/2");
    require(l >= 1 && l <= q - 1, "l must lie in 1..q-1");
    require(digits_binary(l, p, e), "l must have 0/1 digits");
    require(l != (q - 1) / (p - 1), "l must not be all ones");

    const std::uint64_t h = (q - 1) / 2;
    const std::uint64_t s = h - (u + v * int_pow(p, t));
    const std::uint64_t row = star_reduce(l * (s + h), q);
    std::int64_t acc = 0;
    for (std::uint64_t i = 2; i <= q - 2; ++i) {
        const Residue right = ctx.binom(i, 2 * s);
        if (right == 0) continue;
        const Residue left = lucas_binom(row, star_reduce(l * i, q), p);
        const std::int64_t term = static_cast<std::int64_t>(left) * right % p;
        acc += (i % 2 == 0) ? term : -term;
    }
    return reduce(acc, p);
}

Residue lemma32_rhs(std::uint32_t p, std::uint32_t x, std::uint32_t y, std::uint32_t u,
                    std::uint32_t v) {
    require(u <= (p - 1) / 2 && v <= (p - 1) / 2, "u and v must lie in 0..(p-1)/2");
    const bool odd_weight = ((x + y) % 2) == 1;
    std::int64_t acc = 0;
    for (std::uint32_t a = 0; a <= 2 * u; ++a) {
        for (std::uint32_t b = 0; b <= 2 * v; ++b) {
            std::uint64_t term = pow_residue(exact_binom_mod(a, u, p), x, p);
            term = term * pow_residue(exact_binom_mod(b, v, p), x, p) % p;
            term = term * pow_residue(exact_binom_mod(a + b, u + v, p), y, p) % p;
            term = term * exact_binom_mod(2 * u, a, p) % p;
            term = term * exact_binom_mod(2 * v, b, p) % p;
            const bool negative = odd_weight && ((a + b + u + v) % 2 == 1);
            acc += negative ? -static_cast<std::int64_t>(term) : static_cast<std::int64_t>(term);
        }
    }
    return reduce(acc, p);
}

Residue proof_sum_319(std::uint32_t p, std::uint32_t x, std::uint32_t y) {
    const std::uint32_t h = (p - 1) / 2;
    std::int64_t acc = 0;
    for (std::uint32_t a = h; a <= p - 1; ++a) {
        for (std::uint32_t b = h; b <= p - 1; ++b) {
            std::uint64_t term = pow_residue(exact_binom_mod(a, h, p), x, p);
            term = term * pow_residue(exact_binom_mod(b, h, p), x, p) % p;
            term = term * pow_residue(exact_binom_mod(a + b, p - 1, p), y, p) % p;
            term = term * exact_binom_mod(p - 1, a, p) % p;
            term = term * exact_binom_mod(p - 1, b, p) % p;
            acc += ((a + b) % 2 == 1) ? -static_cast<std::int64_t>(term)
                                      : static_cast<std::int64_t>(term);
        }
    }
    return reduce(acc, p);
}

std::vector<std::uint64_t> binary_exponents(std::uint32_t p, std::uint32_t e) {
    std::vector<std::uint64_t> out;
    const std::uint64_t all_ones_mask = (std::uint64_t{1} << e) - 1;
    for (std::uint64_t mask = 1; mask < all_ones_mask; ++mask) {
        std::uint64_t l = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            if (mask >> i & 1) l += int_pow(p, i);
        }
        out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Lemma32Case> lemma32_grid(const CriterionContext& ctx, unsigned jobs) {
    const Field& field = ctx.field();
    const std::uint32_t p = field.p(), e = field.e();
    require(e >= 3, "identity needs e >= 3");
    std::vector<Lemma32Case> cases;
    for (std::uint64_t l : binary_exponents(p, e)) {
        for (std::uint32_t t = 1; t <= e - 1; ++t) {
            for (std::uint32_t u = 0; u <= (p - 1) / 2; ++u) {
                for (std::uint32_t v = 0; v <= (p - 1) / 2; ++v) {
                    Lemma32Case c;
                    c.l = l;
                    c.t = t;
                    c.u = u;
                    c.v = v;
                    c.s = (ctx.q() - 1) / 2 - (u + v * int_pow(p, t));
                    cases.push_back(c);
                }
            }
        }
    }
    parallel_for(cases.size(), jobs, [&](std::size_t i) {
        auto& c = cases[i];
        c.split = xy_params(c.l, c.t, p, e);
        c.complementary_shift = c.split.y == 0 && 2 * c.split.x == e;
        c.lhs = lemma32_lhs(ctx, c.l, c.t, c.u, c.v);
        c.rhs = lemma32_rhs(p, c.split.x, c.split.y, c.u, c.v);
    });
    return cases;
}

}  // namespace fqlab
