#include <gtest/gtest.h>

#include <random>

#include "ajulia/rational.hpp"

using namespace ajulia;

namespace {

/// Valuation by repeated division, independent of mpz_remove.
std::int64_t naive_valuation(Integer n, unsigned long p)
{
    std::int64_t v = 0;
    n = abs(n);
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

ExactRational random_rational(std::mt19937_64& rng, unsigned long p)
{
    std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000);
    std::uniform_int_distribution<int> shift(-6, 6);
    std::uniform_int_distribution<int> coin(0, 19);
    if (coin(rng) == 0) {
        return ExactRational(0);
    }
    ExactRational q(num(rng), den(rng));
    q.canonicalize();
    const int k = shift(rng);
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? ExactRational(q / pk) : ExactRational(q * pk);
}

} // namespace

TEST(Prime, ValidatesSmallValues)
{
    EXPECT_EQ(Prime(2).value(), 2U);
    EXPECT_TRUE(Prime(2147483647).verified());
    for (const std::uint64_t bad : {0ULL, 1ULL, 4ULL, 91ULL, 2147483645ULL}) {
        try {
            (void)Prime(bad);
            ADD_FAILURE() << bad << " accepted";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
        }
    }
}

TEST(Prime, LargeValuesCarryAWarning)
{
    const Prime big((std::uint64_t{1} << 61) - 1);
    EXPECT_FALSE(big.verified());
    EXPECT_TRUE(big.warning().has_value());
    EXPECT_EQ(big.as_integer(), Integer("2305843009213693951"));
    EXPECT_FALSE(Prime(3).warning().has_value());
}

TEST(Valuation, WorkedValues)
{
    for (const std::uint64_t p : {2, 3, 5, 7, 11}) {
        EXPECT_EQ(vp(ExactRational(1), Prime(p)), Valuation(0));
    }
    EXPECT_EQ(vp(ExactRational(3, 4), Prime(2)), Valuation(-2));
    EXPECT_EQ(vp(ExactRational(9, 16), Prime(2)), Valuation(-4));
    EXPECT_EQ(vp(ExactRational(-1, 4), Prime(2)), Valuation(-2));
    EXPECT_EQ(vp(ExactRational(0), Prime(5)), Valuation::infinity());
    EXPECT_EQ(vp(ExactRational(0), Prime(5)).to_string(), "inf");
}

TEST(Valuation, ZeroSentinelIsLargest)
{
    EXPECT_GT(Valuation::infinity(), Valuation(1'000'000));
    EXPECT_EQ(Valuation::infinity() + Valuation(-3), Valuation::infinity());
    EXPECT_EQ(Valuation(2) + Valuation(-5), Valuation(-3));
}

TEST(AbsP, WorkedValues)
{
    EXPECT_TRUE(abs_p(ExactRational(0), Prime(5)).is_zero());
    EXPECT_EQ(abs_p(ExactRational(3, 4), Prime(2)), PAdicMagnitude::power(2, 2));
    EXPECT_EQ(abs_p(ExactRational(3, 4), Prime(2)).to_string(), "2^2");
    // 7 divides neither 1 nor 2.
    EXPECT_EQ(naive_valuation(1, 7), 0);
    EXPECT_EQ(naive_valuation(2, 7), 0);
    EXPECT_EQ(abs_p(ExactRational(-1, 2), Prime(7)), PAdicMagnitude::one(7));
}

TEST(AbsP, Ordering)
{
    const auto zero = PAdicMagnitude::zero(3);
    const auto small = PAdicMagnitude::power(3, -4);
    const auto one = PAdicMagnitude::one(3);
    const auto big = PAdicMagnitude::power(3, 5);
    EXPECT_LT(zero, small);
    EXPECT_LT(small, one);
    EXPECT_LT(one, big);
    EXPECT_EQ(big.to_string(), "3^5");
    EXPECT_EQ(small.to_string(), "3^-4");
    EXPECT_EQ(zero.to_string(), "0");
    EXPECT_THROW((void)(PAdicMagnitude::one(2) < PAdicMagnitude::one(3)), Error);
}

TEST(Valuation, AgreesWithRepeatedDivision)
{
    std::mt19937_64 rng(31);
    for (const unsigned long p : {2UL, 3UL, 5UL, 7UL, 101UL}) {
        for (int trial = 0; trial < 300; ++trial) {
            const ExactRational x = random_rational(rng, p);
            if (x == 0) {
                continue;
            }
            const auto expected = naive_valuation(x.get_num(), p) - naive_valuation(x.get_den(), p);
            EXPECT_EQ(vp(x, Prime(p)), Valuation(expected)) << x.get_str();
        }
    }
}

TEST(Valuation, UltrametricAndMultiplicative)
{
    std::mt19937_64 rng(37);
    for (const unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
        const Prime prime(p);
        for (int trial = 0; trial < 1000; ++trial) {
            const ExactRational x = random_rational(rng, p);
            const ExactRational y = random_rational(rng, p);
            const auto ax = abs_p(x, prime);
            const auto ay = abs_p(y, prime);
            const auto sum = abs_p(ExactRational(x + y), prime);
            EXPECT_LE(sum, std::max(ax, ay));
            if (ax != ay) {
                EXPECT_EQ(sum, std::max(ax, ay));
            }
            EXPECT_EQ(vp(ExactRational(x * y), prime), vp(x, prime) + vp(y, prime));
            EXPECT_EQ(abs_p(ExactRational(x * y), prime), ax * ay);
        }
    }
}

TEST(Valuation, UnrelatedPrimesSeeAUnit)
{
    const ExactRational x(3, 4);
    for (std::uint64_t q = 5; q < 200; ++q) {
        if (Prime::is_small_prime(q)) {
            EXPECT_EQ(vp(x, Prime(q)), Valuation(0));
        }
    }
}

TEST(ParseRational, AcceptsExactForms)
{
    EXPECT_EQ(parse_rational("3/4"), ExactRational(3, 4));
    EXPECT_EQ(parse_rational("-1/2"), ExactRational(-1, 2));
    EXPECT_EQ(parse_rational("+5"), ExactRational(5));
    EXPECT_EQ(parse_rational("  7 "), ExactRational(7));
    EXPECT_EQ(parse_rational("6/4"), ExactRational(3, 2));
    EXPECT_EQ(parse_rational("-0"), ExactRational(0));
    EXPECT_EQ(parse_rational("123456789012345678901234567890/3").get_den(), 1);
}

TEST(ParseRational, RejectsInexactOrMalformed)
{
    for (const char* bad : {"0.5", "1/0", "", "1/-2", "a", "1e3", "1//2", "--1", "3/"}) {
        try {
            (void)parse_rational(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse);
        }
    }
}

TEST(BitLength, CountsLargerPart)
{
    EXPECT_EQ(bit_length(ExactRational(0)), 1U);
    EXPECT_EQ(bit_length(ExactRational(9, 16)), 5U);
    EXPECT_EQ(bit_length(ExactRational(255, 2)), 8U);
}
