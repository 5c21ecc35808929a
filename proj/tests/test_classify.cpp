#include <gtest/gtest.h>

#include <set>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/factorize.hpp"
#include "gf2perfect/sigma.hpp"
#include "support.hpp"

using namespace gf2perfect;
using gf2perfect::testing::hex;

TEST(Parity, Examples) {
    EXPECT_EQ(parity(parse("x^2+x+1")), Parity::Odd);
    EXPECT_EQ(parity(Poly::x()), Parity::Even);
    EXPECT_EQ(parity(Poly::x_plus_one()), Parity::Even);
    EXPECT_EQ(parity(Poly::one()), Parity::Odd);
    EXPECT_EQ(to_string(Parity::Even), "even");
    EXPECT_THROW(parity(Poly::zero()), std::domain_error);
}

TEST(Mersenne, Examples) {
    EXPECT_TRUE(is_mersenne(parse("x^2+x+1")));
    EXPECT_TRUE(is_mersenne(parse("x^4+x^3+1")));
    EXPECT_FALSE(is_mersenne(parse("x^4+x+1")));
    EXPECT_TRUE(is_mersenne(parse("x^4+x^3+x^2+x+1")));
}

TEST(Complete, Examples) {
    EXPECT_TRUE(is_complete(parse("x^3+x+1") * parse("x^3+x^2+1")));
    EXPECT_TRUE(is_complete(Poly::one()));
    EXPECT_FALSE(is_complete(parse("x^2+1")));
    const Poly b = parse("x^2+x");
    EXPECT_TRUE(is_complete_in(Poly::one() + b + b * b, b));
    EXPECT_FALSE(is_complete_in(Poly::one() + b * b, b));
    EXPECT_FALSE(is_complete_in(parse("x^3+x^2+x+1"), b));
}

TEST(Perfect, Examples) {
    EXPECT_TRUE(is_perfect(parse("x^3(x+1)^4(x^4+x^3+1)")));
    EXPECT_FALSE(is_perfect(hex(0x1f)));
    EXPECT_TRUE(is_perfect(Poly::one()));
    EXPECT_TRUE(is_perfect(Poly::zero()));
    EXPECT_FALSE(is_perfect(Poly::x()));
}

TEST(Trivial, FamilyValues) {
    const std::vector<std::uint64_t> oracle{0x1, 0x6, 0x78, 0x7f80, 0x7fff8000};
    for (unsigned n = 0; n < oracle.size(); ++n) EXPECT_EQ(trivial_perfect(n), hex(oracle[n])) << n;
    EXPECT_THROW(trivial_perfect(17), std::out_of_range);
    EXPECT_NO_THROW(trivial_perfect(17, 20));
    EXPECT_EQ(trivial_index(hex(0x7f80)), 3U);
    EXPECT_FALSE(trivial_index(hex(0x36)).has_value());
    EXPECT_EQ(trivial_index(Poly::one()), 0U);
}

TEST(Trivial, PerfectUpToTwelve) {
    for (unsigned n = 1; n <= 12; ++n) {
        const Poly t = trivial_perfect(n);
        ASSERT_EQ(t.deg(), (std::size_t{2} << n) - 2);
        ASSERT_TRUE(is_perfect(t)) << n;
    }
}

TEST(Catalogue, ElevenPerfectsWithFrozenValues) {
    const auto &cat = catalogue();
    const std::vector<std::pair<const char *, std::uint64_t>> oracle{
        {"M5a", 0x36},     {"M5b", 0x24},     {"M11a", 0x9a6},     {"M11b", 0xec4},
        {"M11c", 0xc48},   {"M11d", 0xa50},   {"M15a", 0xcd98},    {"M15b", 0xa140},
        {"M16", 0x10670},  {"M20a", 0x11ab10}, {"M20b", 0x10c1c0}};
    std::multiset<std::size_t> degrees;
    for (const auto &[name, value] : oracle) {
        const Poly &a = cat.get(name);
        EXPECT_EQ(a, hex(value)) << name;
        EXPECT_TRUE(is_perfect(a)) << name;
        EXPECT_EQ(cat.name_of(a), std::string_view(name));
        degrees.insert(a.deg());
    }
    EXPECT_EQ(degrees, (std::multiset<std::size_t>{5, 5, 11, 11, 11, 11, 15, 15, 16, 20, 20}));
    EXPECT_THROW(cat.get("M99"), std::out_of_range);
    EXPECT_FALSE(cat.name_of(hex(0x6)).has_value());
}

TEST(Catalogue, PrimesAreIrreducibleAndOdd) {
    for (const auto &q : catalogue().primes) {
        EXPECT_TRUE(is_irreducible(q.value)) << q.name;
        EXPECT_EQ(parity(q.value), Parity::Odd) << q.name;
        EXPECT_TRUE(is_mersenne(q.value) || q.name == std::string_view("Q4c")) << q.name;
    }
    EXPECT_EQ(catalogue().get("Q4a"), parse("x^4+x^3+1"));
    EXPECT_EQ(catalogue().get("Q4c"), parse("x^4+x+1"));
}

TEST(Catalogue, FactoredFormsMatchFactor) {
    for (const auto &e : catalogue().perfects) {
        EXPECT_EQ(factor(e.value).to_string(), e.factored) << e.name;
    }
    EXPECT_EQ(omega(catalogue().get("M20a")), 5U);
}

TEST(SquareDecompose, Rows) {
    const auto &cat = catalogue();
    const Poly x = Poly::x();
    const Poly x1 = Poly::x_plus_one();
    const Poly q2 = cat.get("Q2");
    struct Row {
        const char *name;
        Poly b;
        Poly s;
    };
    const std::vector<Row> rows{
        {"M5a", x1, x * q2},
        {"M5b", x, x1 * q2},
        {"M11a", x1 * q2, x * cat.get("Q4c")},
        {"M11b", x * q2, x1 * cat.get("Q4c")},
        {"M16", parse("x^2(x+1)^2"), cat.get("Q4a") * cat.get("Q4b")},
    };
    for (const auto &row : rows) {
        const SquareDecomposition d = square_decompose(cat.get(row.name));
        EXPECT_EQ(d.b, row.b) << row.name;
        EXPECT_EQ(d.s, row.s) << row.name;
        EXPECT_TRUE(d.coprime) << row.name;
        EXPECT_TRUE(d.b_even) << row.name;
    }
    const SquareDecomposition cube = square_decompose(parse("x^3"));
    EXPECT_EQ(cube.b, x);
    EXPECT_EQ(cube.s, x);
    EXPECT_FALSE(cube.coprime);
    EXPECT_THROW(square_decompose(Poly::zero()), std::domain_error);
}

class ClassifyProperties : public ::testing::Test {
  protected:
    std::mt19937_64 rng{gf2perfect::testing::kTestSeed + 3};
};

TEST_F(ClassifyProperties, ParityIsMultiplicative) {
    for (int i = 0; i < 10000; ++i) {
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 40);
        const Poly b = gf2perfect::testing::random_nonconstant(rng, 40);
        const bool odd = parity(a) == Parity::Odd && parity(b) == Parity::Odd;
        ASSERT_EQ(parity(a * b) == Parity::Odd, odd);
    }
}

TEST_F(ClassifyProperties, MersenneMeansSplitSuccessor) {
    for (std::uint64_t v = 2; v < (1U << 12); ++v) {
        const Poly a = hex(v);
        const Poly succ = a + Poly::one();
        bool splits = true;
        if (succ.deg() >= 1) {
            const Factorization f = factor(succ);
            for (const auto &pp : f.factors()) {
                if (pp.prime != Poly::x() && pp.prime != Poly::x_plus_one()) splits = false;
            }
        }
        if (is_mersenne(a)) ASSERT_TRUE(splits) << to_hex(a);
        ASSERT_EQ(is_mersenne(a), splits) << to_hex(a);
    }
}

TEST_F(ClassifyProperties, SquareDecompositionReconstructs) {
    for (int i = 0; i < 3000; ++i) {
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 30) * gf2perfect::testing::random_nonconstant(rng, 10).square();
        const SquareDecomposition d = square_decompose(a);
        ASSERT_EQ(d.b.square() * d.s, a);
        ASSERT_TRUE(gcd(d.s, d.s.derivative()).is_one());
    }
}
