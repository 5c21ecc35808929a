#include <gtest/gtest.h>

#include "gf2perfect/factorize.hpp"
#include "gf2perfect/kernels/sieve.hpp"
#include "gf2perfect/sigma.hpp"
#include "gf2perfect/word.hpp"
#include "support.hpp"

using namespace gf2perfect;
using gf2perfect::testing::hex;
using word::Word;

class WordKernels : public ::testing::Test {
  protected:
    std::mt19937_64 rng{gf2perfect::testing::kTestSeed + 4};
    Word random_word(unsigned max_degree) {
        const unsigned d = static_cast<unsigned>(rng() % (max_degree + 1));
        const Word mask = d == 63 ? ~Word{0} : ((Word{1} << (d + 1)) - 1);
        return (rng() & mask) | (Word{1} << d);
    }
};

TEST_F(WordKernels, MatchPolyArithmetic) {
    for (int i = 0; i < 20000; ++i) {
        const Word a = random_word(31);
        const Word b = random_word(31);
        ASSERT_EQ(hex(word::clmul(a, b)), hex(a) * hex(b));
        const Word m = random_word(40);
        ASSERT_EQ(hex(word::mod(word::clmul(a, b), m)), (hex(a) * hex(b)) % hex(m));
        const auto [q, r] = word::divrem(word::clmul(a, b), m);
        const auto [pq, pr] = divrem(hex(a) * hex(b), hex(m));
        ASSERT_EQ(hex(q), pq);
        ASSERT_EQ(hex(r), pr);
        ASSERT_EQ(hex(word::gcd(a, b)), gcd(hex(a), hex(b)));
    }
}

TEST_F(WordKernels, WideProductAndMulMod) {
    for (int i = 0; i < 20000; ++i) {
        const Word a = random_word(63);
        const Word b = random_word(63);
        const word::Wide w = word::clmul_wide(a, b);
        ASSERT_EQ(Poly::from_limbs({w.lo, w.hi}), hex(a) * hex(b));
        const Word m = random_word(63) | 2;
        ASSERT_EQ(hex(word::mul_mod(word::mod(a, m), word::mod(b, m), m)), mul_mod(hex(a), hex(b), hex(m)));
    }
}

TEST_F(WordKernels, GeometricSumMatchesPoly) {
    for (int i = 0; i < 5000; ++i) {
        const Word a = random_word(6);
        const unsigned e = static_cast<unsigned>(rng() % 9);
        ASSERT_EQ(hex(word::geometric_sum(a, e)), geometric_sum(hex(a), e));
    }
}

TEST(WordKernelsFixed, OddPredicate) {
    EXPECT_TRUE(word::is_odd(0x7));
    EXPECT_FALSE(word::is_odd(0x6));
    EXPECT_FALSE(word::is_odd(0x3));
    EXPECT_TRUE(word::is_odd(0x1));
}

TEST(FactorSieve, AgreesWithFactorExhaustively) {
    PrimeTable t;
    const auto primes = t.words_up_to(7);
    const kernels::FactorSieve sieve(14, primes, 2);
    for (Word a = 1; a < (Word{1} << 15); ++a) {
        const kernels::WordFactors wf = sieve.factor(a);
        std::vector<PrimePower> pps;
        for (const auto &f : wf.view()) pps.push_back({hex(f.prime), f.exponent});
        ASSERT_EQ(Factorization(pps), factor(hex(a))) << a;
        ASSERT_EQ(hex(kernels::sigma(wf.view())), sigma(hex(a))) << a;
    }
}

TEST(FactorSieve, StripsLinearFactorsBeyondTableDegree) {
    PrimeTable t;
    const auto primes = t.words_up_to(4);
    const kernels::FactorSieve sieve(8, primes, 1);
    const Word a = word::clmul(Word{1} << 20, 0x1f);  // x^20 (x^4+x^3+x^2+x+1)
    const auto f = sieve.factor(a);
    ASSERT_EQ(f.size, 2U);
    EXPECT_EQ(f.items[0].prime, 2U);
    EXPECT_EQ(f.items[0].exponent, 20U);
    EXPECT_THROW(sieve.factor(word::clmul(0x1f, 0x13f)), std::out_of_range);
    EXPECT_THROW(sieve.factor(0), std::domain_error);
}

TEST(FactorSieve, IndependentOfWorkerCount) {
    PrimeTable t;
    const auto primes = t.words_up_to(8);
    const kernels::FactorSieve one(16, primes, 1);
    const kernels::FactorSieve many(16, primes, 8);
    for (Word a = 1; a < (Word{1} << 17); a += 7) {
        const auto x = one.factor(a);
        const auto y = many.factor(a);
        ASSERT_EQ(x.size, y.size);
        for (unsigned i = 0; i < x.size; ++i) {
            ASSERT_EQ(x.items[i].prime, y.items[i].prime);
            ASSERT_EQ(x.items[i].exponent, y.items[i].exponent);
        }
    }
}

TEST(FactorSieve, HardCap) {
    EXPECT_THROW(kernels::FactorSieve(Budgets::kSieveMaxDegree + 1, {}, 1), std::out_of_range);
}

TEST(SigmaOfSquare, MatchesPoly) {
    PrimeTable t;
    const auto primes = t.words_up_to(6);
    const kernels::FactorSieve sieve(12, primes, 1);
    for (Word b = 1; b < (Word{1} << 13); ++b) {
        ASSERT_EQ(hex(kernels::sigma_of_square(sieve.factor(b).view())), sigma(hex(b).square())) << b;
    }
}
