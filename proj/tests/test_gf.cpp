#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fqlab/error.hpp"
#include "fqlab/gf.hpp"
#include "oracles.hpp"

using namespace fqlab;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.kind();
    }
    ADD_FAILURE() << "expected an fqlab::Error";
    return ErrorKind::ParamDomain;
}

}  // namespace

TEST(FieldConstruction, PrimeFieldUsesDegreeOneModulus) {
    const Field f = construct_field(3, 1);
    EXPECT_EQ(f.q(), 3u);
    EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(f.modulus_string(), "X");
}

TEST(FieldConstruction, NineUsesSmallestIrreducibleQuadratic) {
    // Monic quadratics over Z_3 with c0 compared first: X^2 (root 0), X^2+X (root 0), ...
    // the first root-free one is X^2 + 1.
    const auto expected = oracle::smallest_irreducible(3, 2);
    ASSERT_EQ(expected, (std::vector<std::uint32_t>{1, 0, 1}));
    const Field f = construct_field(3, 2);
    EXPECT_EQ(f.q(), 9u);
    EXPECT_EQ(f.modulus(), expected);
}

TEST(FieldConstruction, ModulusMatchesTrialDivisionOracle) {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 2}, {5, 3}, {5, 4}, {7, 2},
             {7, 3}, {11, 2}, {13, 2}}) {
        SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(e));
        EXPECT_EQ(smallest_irreducible(p, e), oracle::smallest_irreducible(p, e));
    }
}

TEST(FieldConstruction, IrreducibilityAgreesWithTrialDivision) {
    // Every monic cubic and quartic over Z_3.
    for (std::uint32_t e : {3u, 4u}) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < e; ++i) count *= 3;
        for (std::uint32_t n = 0; n < count; ++n) {
            std::vector<std::uint32_t> f(e + 1, 0);
            f[e] = 1;
            for (std::uint32_t i = 0, v = n; i < e; ++i, v /= 3) f[i] = v % 3;
            EXPECT_EQ(is_irreducible(f, 3), oracle::irreducible_by_trial_division(f, 3)) << n;
        }
    }
}

TEST(FieldConstruction, Errors) {
    EXPECT_EQ(kind_of([] { construct_field(4, 1); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { construct_field(2, 3); }), ErrorKind::EvenPrime);
    EXPECT_EQ(kind_of([] { construct_field(3, 13); }), ErrorKind::CapExceeded);
    EXPECT_EQ(kind_of([] { construct_field(3, 4, FieldOptions{80}); }), ErrorKind::CapExceeded);
    EXPECT_EQ(kind_of([] { construct_field(3, 0); }), ErrorKind::ParamDomain);
    EXPECT_EQ(kind_of([] { field_of_order(4); }), ErrorKind::EvenPrime);
    EXPECT_EQ(kind_of([] { field_of_order(6); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of([] { field_of_order(1); }), ErrorKind::NotPrime);
    EXPECT_EQ(field_of_order(243).e(), 5u);
}

TEST(FieldConstruction, Deterministic) {
    const Field a = construct_field(5, 3);
    const Field b = construct_field(5, 3);
    EXPECT_EQ(a.modulus(), b.modulus());
    EXPECT_EQ(a.generator(), b.generator());
    EXPECT_EQ(enumerate_elements(a), enumerate_elements(b));
    EXPECT_TRUE(a == b);
}

TEST(FieldArith, SmallExamples) {
    const Field f3 = construct_field(3, 1);
    EXPECT_EQ(field_arith(f3, ArithOp::Add, Element{2}, Element{2}), Element{1});
    EXPECT_EQ(field_pow(f3, Element{2}, 2), Element{1});

    const Field f9 = construct_field(3, 2);
    const std::vector<std::uint32_t> x_coeffs{0, 1};
    const Element x = f9.from_coeffs(x_coeffs);
    // X^2 = -1 modulo X^2 + 1.
    EXPECT_EQ(f9.coeffs(f9.mul(x, x)), (std::vector<std::uint32_t>{2, 0}));
    EXPECT_EQ(f9.mul(x, x), f9.from_integer(-1));
}

TEST(FieldArith, InverseLawAndZeroDivision) {
    for (std::uint64_t q : {3u, 9u, 25u, 27u, 49u, 125u}) {
        const Field f = field_of_order(q);
        for (Element x : enumerate_elements(f)) {
            if (x == f.zero()) continue;
            EXPECT_EQ(f.mul(x, field_arith(f, ArithOp::Inv, x, x)), f.one());
        }
        EXPECT_THROW(f.inv(f.zero()), Error);
        try {
            f.inv(f.zero());
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), ErrorKind::DivisionByZero);
        }
    }
}

TEST(FieldArith, LogTableMatchesSchoolbook) {
    for (std::uint64_t q : {3u, 9u, 27u, 25u, 49u, 121u}) {
        const Field f = field_of_order(q);
        for (Element a : enumerate_elements(f)) {
            for (Element b : enumerate_elements(f)) {
                ASSERT_EQ(f.mul(a, b), f.mul_schoolbook(a, b)) << q;
            }
        }
    }
}

TEST(FieldArith, RingAxiomsExhaustiveOnNine) {
    const Field f = construct_field(3, 2);
    const auto all = enumerate_elements(f);
    for (Element a : all) {
        EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
        EXPECT_EQ(f.add_one(a), f.add(a, f.one()));
        for (Element b : all) {
            EXPECT_EQ(f.add(a, b), f.add(b, a));
            EXPECT_EQ(f.mul(a, b), f.mul(b, a));
            EXPECT_EQ(f.sub(f.add(a, b), b), a);
            for (Element c : all) {
                EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST(FieldPow, ConventionsAndFrobenius) {
    for (std::uint64_t q : {3u, 5u, 9u, 27u, 125u}) {
        const Field f = field_of_order(q);
        for (Element x : enumerate_elements(f)) {
            EXPECT_EQ(field_pow(f, x, 0), f.one());
            EXPECT_EQ(field_pow(f, x, q), x);
            if (x != f.zero()) {
                EXPECT_EQ(field_pow(f, x, q - 1), f.one());
            }
        }
    }
}

TEST(FieldPow, ExponentsAdd) {
    const Field f = field_of_order(81);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    std::uniform_int_distribution<std::uint64_t> exponent(0, 1000);
    for (int trial = 0; trial < 2000; ++trial) {
        const Element x{pick(rng)};
        const std::uint64_t n = exponent(rng), m = exponent(rng);
        ASSERT_EQ(f.pow(x, n + m), f.mul(f.pow(x, n), f.pow(x, m)));
    }
}

TEST(FieldPow, FrobeniusIsAnAutomorphism) {
    for (std::uint64_t q : {27u, 125u, 243u}) {
        const Field f = field_of_order(q);
        const auto all = enumerate_elements(f);
        std::set<Element> image;
        for (Element a : all) image.insert(f.pow(a, f.p()));
        EXPECT_EQ(image.size(), all.size());
        for (Element a : all) {
            for (Element b : all) {
                const Element fa = f.pow(a, f.p()), fb = f.pow(b, f.p());
                ASSERT_EQ(f.pow(f.add(a, b), f.p()), f.add(fa, fb));
                ASSERT_EQ(f.pow(f.mul(a, b), f.p()), f.mul(fa, fb));
            }
        }
    }
}

TEST(Enumerate, OrderAndSize) {
    const Field f3 = construct_field(3, 1);
    EXPECT_EQ(enumerate_elements(f3), (std::vector<Element>{Element{0}, Element{1}, Element{2}}));

    const Field f9 = construct_field(3, 2);
    const auto all = enumerate_elements(f9);
    ASSERT_EQ(all.size(), 9u);
    EXPECT_EQ(all[0], f9.zero());
    EXPECT_EQ(all[1], f9.one());
    EXPECT_EQ(std::set<Element>(all.begin(), all.end()).size(), 9u);
    // Coefficient vectors ascend with c_0 as the least significant position.
    EXPECT_EQ(f9.coeffs(all[2]), (std::vector<std::uint32_t>{2, 0}));
    EXPECT_EQ(f9.coeffs(all[3]), (std::vector<std::uint32_t>{0, 1}));
}
