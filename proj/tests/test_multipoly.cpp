#include <gtest/gtest.h>

#include <random>

#include "staudt/errors.hpp"
#include "staudt/multipoly.hpp"

using namespace staudt;

namespace {

constexpr int kIndices = 3;

MultiPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> terms(0, 4), exp(0, 2), coeff(-5, 5), var(1, kIndices), side(0, 1);
    MultiPoly p(kIndices);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        MultiPoly term = MultiPoly::constant(kIndices, coeff(rng));
        for (int k = 0; k < 3; ++k) {
            const int i = var(rng);
            term *= (side(rng) ? MultiPoly::a(kIndices, i) : MultiPoly::b(kIndices, i)).pow(static_cast<unsigned>(exp(rng)));
        }
        p += term;
    }
    return p;
}

std::vector<mpq_class> random_values(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> draw(-9, 9);
    std::vector<mpq_class> out;
    for (int i = 0; i < kIndices; ++i)
        out.emplace_back(draw(rng));
    return out;
}

} // namespace

TEST(MultiPoly, RingAxioms)
{
    std::mt19937_64 rng(1);
    const auto zero = MultiPoly(kIndices);
    const auto one = MultiPoly::constant(kIndices, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        EXPECT_EQ(f + g, g + f);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ(f + zero, f);
        EXPECT_EQ(f * one, f);
        EXPECT_TRUE((f - f).is_zero());
        EXPECT_TRUE((f * zero).is_zero());
    }
}

TEST(MultiPoly, EvaluationIsARingMap)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_poly(rng), g = random_poly(rng);
        const auto a = random_values(rng), b = random_values(rng);
        EXPECT_EQ((f * g).evaluate(a, b), f.evaluate(a, b) * g.evaluate(a, b));
        EXPECT_EQ((f - g).evaluate(a, b), f.evaluate(a, b) - g.evaluate(a, b));
        EXPECT_EQ(f.pow(3).evaluate(a, b), f.evaluate(a, b) * f.evaluate(a, b) * f.evaluate(a, b));
    }
}

TEST(MultiPoly, Printing)
{
    const int n = 2;
    const auto a1 = MultiPoly::a(n, 1), a2 = MultiPoly::a(n, 2), b1 = MultiPoly::b(n, 1), b2 = MultiPoly::b(n, 2);
    EXPECT_EQ((a1 * b2 - a2 * b1).to_string(), "a1*b2 - a2*b1");
    EXPECT_EQ(MultiPoly(n).to_string(), "0");
    EXPECT_EQ((a1.pow(2) * mpq_class(3) - MultiPoly::constant(n, mpq_class(1) / 2)).to_string(), "3*a1^2 - 1/2");
    EXPECT_EQ((-a1 * b1).to_string(), "-a1*b1");
}

TEST(MultiPoly, DegreesAndHomogeneity)
{
    const int n = 3;
    const auto a1 = MultiPoly::a(n, 1), b2 = MultiPoly::b(n, 2), a3 = MultiPoly::a(n, 3);
    const auto f = a1 * b2 * a3 + a1 * a1 * b2;
    EXPECT_EQ(f.degree(), 3);
    EXPECT_TRUE(f.is_homogeneous());
    EXPECT_EQ(f.index_degrees(), (std::vector<int>{-1, 1, -1}));
    EXPECT_FALSE((f + a1).is_homogeneous());
    EXPECT_EQ(MultiPoly(n).degree(), -1);
    EXPECT_EQ(f.term_count(), 2U);
}

TEST(MultiPoly, Substitution)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_poly(rng);
        auto a = random_values(rng), b = random_values(rng);
        // a_2 -> a_1 + b_3, then evaluate, equals evaluating with a_2 replaced.
        const auto replaced = f.substitute_a(2, MultiPoly::a(kIndices, 1) + MultiPoly::b(kIndices, 3));
        auto a_sub = a;
        a_sub[1] = a[0] + b[2];
        EXPECT_EQ(replaced.evaluate(a, b), f.evaluate(a_sub, b));
        const auto fixed = f.substitute_b(1, MultiPoly::constant(kIndices, 1));
        auto b_one = b;
        b_one[0] = 1;
        EXPECT_EQ(fixed.evaluate(a, b), f.evaluate(a, b_one));
    }
}

TEST(MultiPoly, RingMismatchAndLimits)
{
    EXPECT_THROW(MultiPoly(2) + MultiPoly(3), DimensionMismatch);
    EXPECT_THROW(MultiPoly(0), Error);
    EXPECT_THROW(MultiPoly(17), Error);
    EXPECT_THROW(MultiPoly::a(2, 3), Error);
    EXPECT_NO_THROW(MultiPoly(16));
}
