#include <gtest/gtest.h>

#include "currents/errors.hpp"
#include "currents/exact.hpp"
#include "currents/random.hpp"

using namespace currents;

namespace {

Rational random_rational(TrialRng& rng, std::int64_t bound = 50) {
    const std::int64_t p = rng.uniform(-bound, bound);
    const std::int64_t q = rng.uniform(1, bound);
    return Rational::of(p, q);
}

Gaussian random_gaussian(TrialRng& rng) { return {random_rational(rng, 12), random_rational(rng, 12)}; }

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational::of(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational::of(0, -7).to_string(), "0");
    EXPECT_EQ(Rational::of(10, 5).to_string(), "2");
    EXPECT_EQ(Rational::of(6, -4).denominator(), 2);
    EXPECT_TRUE(Rational::of(8, 4).is_integer());
    EXPECT_EQ(Rational::of(-1, 3).sign(), -1);
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational::of(1, 0), DivisionByZero);
    EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-1/2"), rat(-1, 2));
    EXPECT_EQ(Rational::parse("3"), rat(3));
    EXPECT_EQ(Rational::parse("4/6"), rat(2, 3));
    EXPECT_EQ(Rational::parse("+5"), rat(5));
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse("a/b"), ParseError);
    EXPECT_THROW(Rational::parse(" 1"), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, BeyondMachineWords) {
    Rational big = Rational::parse("123456789012345678901234567891/7");
    EXPECT_EQ((big * big / big).to_string(), "123456789012345678901234567891/7");
    Rational x(1);
    for (int i = 0; i < 100; ++i) x *= rat(3, 2);
    EXPECT_EQ(x.denominator(), mpz_class(1) << 100);
}

TEST(Rational, ParsePrintRoundTrip) {
    for (std::uint64_t t = 0; t < 2000; ++t) {
        TrialRng rng(7, t);
        const Rational r = random_rational(rng, 1000);
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
}

TEST(Rational, FieldAxioms) {
    for (std::uint64_t t = 0; t < 10000; ++t) {
        TrialRng rng(11, t);
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + Rational(0), a);
        ASSERT_EQ(a * Rational(1), a);
        ASSERT_EQ(a + (-a), Rational(0));
        if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Rational(1));
        ASSERT_EQ((a < b) + (a == b) + (a > b), 1);
    }
}

TEST(Gaussian, Printing) {
    EXPECT_EQ(Gaussian(rat(1, 2)).to_string(), "1/2");
    EXPECT_EQ(Gaussian(rat(1), rat(-2)).to_string(), "(1-2i)");
    EXPECT_EQ(Gaussian(rat(0), rat(1, 3)).to_string(), "(0+1/3i)");
}

TEST(Gaussian, UnitRelations) {
    const Gaussian i = Gaussian::i();
    EXPECT_EQ(i * i, Gaussian(-1));
    EXPECT_EQ(i.inverse(), -i);
    EXPECT_EQ(Gaussian(rat(3), rat(4)).norm(), rat(25));
    EXPECT_THROW(Gaussian(0).inverse(), DivisionByZero);
}

TEST(Gaussian, FieldAxioms) {
    for (std::uint64_t t = 0; t < 10000; ++t) {
        TrialRng rng(13, t);
        const Gaussian a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
        ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
        if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Gaussian(1));
    }
}

TEST(TrialRng, DeterministicAndInRange) {
    TrialRng a(42, 3), b(42, 3), c(42, 4);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.uniform(-3, 3);
        ASSERT_EQ(x, b.uniform(-3, 3));
        ASSERT_GE(x, -3);
        ASSERT_LE(x, 3);
        differs |= x != c.uniform(-3, 3);
    }
    EXPECT_TRUE(differs);
}
