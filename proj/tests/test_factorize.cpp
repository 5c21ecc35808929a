#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gf2perfect/factorize.hpp"
#include "support.hpp"

using namespace gf2perfect;
using gf2perfect::testing::hex;

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(parse("x^2+x+1")));
    EXPECT_FALSE(is_irreducible(parse("x^4+x^2+1")));
    EXPECT_TRUE(is_irreducible(parse("x^4+x^3+x^2+x+1")));
    EXPECT_TRUE(is_irreducible(Poly::x()));
    EXPECT_TRUE(is_irreducible(Poly::x_plus_one()));
    EXPECT_FALSE(is_irreducible(parse("x^2+1")));
    EXPECT_TRUE(is_irreducible(parse("x^127+x+1")));
    EXPECT_FALSE(is_irreducible(parse("x^127+x+1") * parse("x^2+x+1")));
    EXPECT_THROW(is_irreducible(Poly::one()), std::domain_error);
    EXPECT_THROW(is_irreducible(Poly::zero()), std::domain_error);
}

TEST(Factor, Examples) {
    EXPECT_EQ(factor(hex(0x10670)).to_string(), "x^4(x+1)^4(x^4+x^3+1)(x^4+x^3+x^2+x+1)");
    EXPECT_EQ(factor(hex(0x7f)).to_string(), "(x^3+x+1)(x^3+x^2+1)");
    EXPECT_EQ(factor(parse("x^3(x+1)")).to_string(), "x^3(x+1)");
    EXPECT_TRUE(factor(Poly::one()).empty());
    EXPECT_EQ(factor(Poly::one()).to_string(), "1");
    EXPECT_THROW(factor(Poly::zero()), std::domain_error);
    EXPECT_EQ(omega(hex(0x11ab10)), 5U);
    EXPECT_EQ(valuation(Poly::x(), parse("x^3(x+1)")), 3U);
    EXPECT_EQ(valuation(parse("x^2+x+1"), Poly::x_plus_one()), 0U);
}

TEST(Factor, EqualDegreeSplitting) {
    // Products of many primes of one degree exercise the trace splitting.
    PrimeTable t;
    Poly a = Poly::one();
    for (const Poly &p : t.primes_of_degree(7)) a = a * p;
    const Factorization f = factor(a);
    EXPECT_EQ(f.omega(), 18U);
    EXPECT_EQ(f.product(), a);
}

TEST(Factor, SeedDoesNotChangeResult) {
    const Poly a = parse("(x^5+x^2+1)^3(x^8+x^4+x^3+x+1)(x^8+x^4+x^3+x^2+1)(x^13+x^4+x^3+x+1)");
    EXPECT_EQ(factor(a, 1), factor(a, 2));
    EXPECT_EQ(factor(a, 1).product(), a);
}

TEST(SquareFree, PowerOfTwoParts) {
    const auto parts = squarefree_decompose(parse("x^3(x+1)"));
    ASSERT_EQ(parts.size(), 2U);
    EXPECT_EQ(parts[0].prime, parse("x^2+x"));
    EXPECT_EQ(parts[0].exponent, 1U);
    EXPECT_EQ(parts[1].prime, Poly::x());
    EXPECT_EQ(parts[1].exponent, 2U);
    EXPECT_THROW(squarefree_decompose(Poly::zero()), std::domain_error);
}

TEST(Necklace, Counts) {
    const std::vector<std::uint64_t> expected{2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
    for (std::size_t d = 1; d <= expected.size(); ++d) EXPECT_EQ(necklace_count(d), expected[d - 1]) << d;
    EXPECT_EQ(necklace_count(32), 134215680U);
}

TEST(PrimeTable, MatchesTrialDivisionOracle) {
    const std::vector<std::uint64_t> expected{2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
    PrimeTable t;
    for (std::size_t d = 1; d <= 12; ++d) EXPECT_EQ(t.primes_of_degree(d).size(), expected[d - 1]);
    EXPECT_EQ(t.primes_of_degree(3), (std::vector<Poly>{parse("x^3+x+1"), parse("x^3+x^2+1")}));
    EXPECT_EQ(t.primes_of_degree(4),
              (std::vector<Poly>{parse("x^4+x+1"), parse("x^4+x^3+1"), parse("x^4+x^3+x^2+x+1")}));
}

TEST(PrimeTable, SieveAndRabinAgree) {
    PrimeTable sieve;
    PrimeTable rabin;
    rabin.set_sieve_crossover(0);
    for (std::size_t d = 1; d <= 14; ++d) EXPECT_EQ(sieve.primes_of_degree(d), rabin.primes_of_degree(d)) << d;
}

TEST(PrimeTable, CacheRoundTrip) {
    const auto dir = std::filesystem::temp_directory_path() / "gf2perfect_test_cache";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto file = dir / "primes.txt";
    {
        PrimeTable t(file);
        EXPECT_FALSE(t.loaded_from_cache());
        t.extend_to(10);
    }
    ASSERT_TRUE(std::filesystem::exists(file));
    {
        std::ifstream in(file);
        std::string first;
        std::getline(in, first);
        EXPECT_EQ(first, "# gf2-primes v1 max_degree=10");
    }
    PrimeTable again(file);
    EXPECT_TRUE(again.loaded_from_cache());
    EXPECT_EQ(again.max_degree(), 10U);
    EXPECT_EQ(again.primes_of_degree(10).size(), 99U);
    std::filesystem::remove_all(dir);
}

TEST(PrimeTable, RejectsCorruptCache) {
    EXPECT_FALSE(PrimeTable::deserialize("garbage").has_value());
    EXPECT_FALSE(PrimeTable::deserialize("# gf2-primes v1 max_degree=2\n1 0x2\n1 0x3\n").has_value());
    EXPECT_FALSE(PrimeTable::deserialize("# gf2-primes v1 max_degree=2\n1 0x2\n1 0x3\n2 0x5\n").has_value());
    EXPECT_TRUE(PrimeTable::deserialize("# gf2-primes v1 max_degree=2\n1 0x2\n1 0x3\n2 0x7\n").has_value());
    EXPECT_FALSE(PrimeTable::deserialize("# gf2-primes v2 max_degree=1\n1 0x2\n1 0x3\n").has_value());

    const auto file = std::filesystem::temp_directory_path() / "gf2perfect_corrupt_cache.txt";
    {
        std::ofstream out(file);
        out << "# gf2-primes v1 max_degree=3\n1 0x2\n";
    }
    PrimeTable t(file);
    EXPECT_FALSE(t.loaded_from_cache());
    EXPECT_EQ(t.primes_of_degree(3).size(), 2U);
    std::filesystem::remove(file);
}

class FactorProperties : public ::testing::Test {
  protected:
    std::mt19937_64 rng{gf2perfect::testing::kTestSeed + 1};
};

TEST_F(FactorProperties, ReconstructionAndIrreducibility) {
    for (int i = 0; i < 2000; ++i) {
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 64);
        const Factorization f = factor(a);
        ASSERT_EQ(f.product(), a);
        for (const auto &pp : f.factors()) {
            ASSERT_TRUE(is_irreducible(pp.prime)) << to_hex(pp.prime);
            ASSERT_GE(pp.exponent, 1U);
        }
        ASSERT_TRUE(std::is_sorted(f.factors().begin(), f.factors().end(),
                                   [](const PrimePower &x, const PrimePower &y) { return x.prime < y.prime; }));
    }
}

TEST_F(FactorProperties, ReconstructionManySmall) {
    for (int i = 0; i < 100000; ++i) {
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 64);
        ASSERT_EQ(factor(a).product(), a);
    }
}

TEST_F(FactorProperties, SquareFreePartsMultiplyBack) {
    for (int i = 0; i < 2000; ++i) {
        const Poly c = gf2perfect::testing::random_nonconstant(rng, 12);
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 30) * c * c * c;
        Poly prod = Poly::one();
        for (const auto &part : squarefree_decompose(a)) {
            ASSERT_TRUE(gcd(part.prime, part.prime.derivative()).is_one());
            prod = prod * pow(part.prime, part.exponent);
        }
        ASSERT_EQ(prod, a);
    }
}

TEST_F(FactorProperties, IrreducibleAgreesWithFactor) {
    for (int i = 0; i < 3000; ++i) {
        const Poly a = gf2perfect::testing::random_nonconstant(rng, 90);
        const Factorization f = factor(a);
        const bool prime = f.omega() == 1 && f.factors()[0].exponent == 1;
        ASSERT_EQ(is_irreducible(a), prime) << to_hex(a);
    }
}
