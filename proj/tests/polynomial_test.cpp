#include <gtest/gtest.h>

#include <random>

#include "ajulia/polynomial.hpp"

using namespace ajulia;

namespace {

ExactRational q(long n, long d = 1)
{
    ExactRational r(n, d);
    r.canonicalize();
    return r;
}

ExactRational small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 8);
    return q(num(rng), den(rng));
}

RationalPolynomial random_polynomial(std::mt19937_64& rng, std::size_t min_degree, std::size_t max_degree,
                                     bool monic)
{
    std::uniform_int_distribution<std::size_t> degree(min_degree, max_degree);
    std::vector<ExactRational> c(degree(rng) + 1);
    for (auto& a : c) {
        a = small_rational(rng);
    }
    if (monic || c.back() == 0) {
        c.back() = monic ? q(1) : q(2, 3);
    }
    return RationalPolynomial(std::move(c));
}

const RationalPolynomial example_cubic = parse_polynomial("1,0,-3/4,-3/4");

} // namespace

TEST(RationalPolynomial, TrimsAndReportsDegree)
{
    const RationalPolynomial p({q(1), q(2), q(0), q(0)});
    EXPECT_EQ(p.degree(), 1U);
    EXPECT_TRUE(RationalPolynomial({q(0)}).is_zero());
    EXPECT_EQ(RationalPolynomial().to_string(), "0");
    EXPECT_EQ(example_cubic.degree(), 3U);
    EXPECT_TRUE(example_cubic.is_monic());
    EXPECT_EQ(example_cubic.to_string(), "1,0,-3/4,-3/4");
}

TEST(PolyEval, WorkedValues)
{
    EXPECT_EQ(poly_eval(example_cubic, q(1, 2)), q(-1));
    EXPECT_EQ(poly_eval(example_cubic, q(-1, 2)), q(-1, 2));
    EXPECT_EQ(poly_eval(RationalPolynomial(), q(17, 3)), q(0));
}

TEST(PolyCompose, WorkedValues)
{
    const auto f1 = parse_polynomial("1,0,-1/4");
    const auto f2 = parse_polynomial("1,0,1/2");
    EXPECT_EQ(poly_compose(f2, f1), parse_polynomial("1,0,-1/2,0,9/16"));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_polynomial(rng, 0, 5, false);
        EXPECT_EQ(poly_compose(RationalPolynomial::identity(), f), f);
        EXPECT_EQ(poly_compose(f, RationalPolynomial::identity()), f);
    }
}

TEST(PolyCompose, EvaluationIdentityAndDegree)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_polynomial(rng, 1, 4, false);
        const auto g = random_polynomial(rng, 1, 4, false);
        const auto gf = poly_compose(g, f);
        EXPECT_EQ(gf.degree(), g.degree() * f.degree());
        for (int k = 0; k < 10; ++k) {
            const ExactRational x = small_rational(rng);
            EXPECT_EQ(poly_eval(gf, x), poly_eval(g, poly_eval(f, x)));
        }
    }
}

TEST(PolyDerivative, WorkedValues)
{
    EXPECT_EQ(poly_derivative(parse_polynomial("1,0,-1/2,0,9/16")), parse_polynomial("4,0,-1,0"));
    EXPECT_EQ(poly_derivative(example_cubic), parse_polynomial("3,0,-3/4"));
    EXPECT_TRUE(poly_derivative(parse_polynomial("5/7")).is_zero());
    EXPECT_TRUE(poly_derivative(RationalPolynomial()).is_zero());
}

TEST(PolyDerivative, MatchesDifferenceQuotientLimitOnMonomials)
{
    // d/dz z^n = n z^(n-1), checked through exact evaluation at several points.
    for (std::size_t n = 1; n < 8; ++n) {
        std::vector<ExactRational> c(n + 1);
        c[n] = 1;
        const auto d = poly_derivative(RationalPolynomial(c));
        for (long x = -3; x <= 3; ++x) {
            ExactRational expected = static_cast<long>(n);
            for (std::size_t k = 1; k < n; ++k) {
                expected *= x;
            }
            EXPECT_EQ(poly_eval(d, q(x)), expected);
        }
    }
}

TEST(RationalRoots, WorkedValues)
{
    const auto quartic_critical = rational_roots(parse_polynomial("4,0,-1,0"));
    EXPECT_EQ(quartic_critical.roots, (std::vector<ExactRational>{q(0), q(1, 2), q(-1, 2)}));
    EXPECT_EQ(quartic_critical.unresolved_degree, 0U);

    const auto cubic_critical = rational_roots(parse_polynomial("3,0,-3/4"));
    EXPECT_EQ(cubic_critical.roots, (std::vector<ExactRational>{q(1, 2), q(-1, 2)}));
    EXPECT_EQ(cubic_critical.unresolved_degree, 0U);

    const auto irrational = rational_roots(parse_polynomial("1,0,-2"));
    EXPECT_TRUE(irrational.roots.empty());
    EXPECT_EQ(irrational.unresolved_degree, 2U);
}

TEST(RationalRoots, RepeatedRootsAndConstants)
{
    // (z - 2/3)^2 (z + 5) z^3
    const RationalPolynomial f = RationalPolynomial({q(-2, 3), q(1)}) * RationalPolynomial({q(-2, 3), q(1)}) *
                                 RationalPolynomial({q(5), q(1)}) * parse_polynomial("1,0,0,0");
    const auto r = rational_roots(f);
    EXPECT_EQ(r.roots.size(), 6U);
    EXPECT_EQ(std::count(r.roots.begin(), r.roots.end(), q(0)), 3);
    EXPECT_EQ(std::count(r.roots.begin(), r.roots.end(), q(2, 3)), 2);
    EXPECT_EQ(std::count(r.roots.begin(), r.roots.end(), q(-5)), 1);
    EXPECT_EQ(distinct(r.roots).size(), 3U);

    const auto constant = rational_roots(parse_polynomial("7"));
    EXPECT_TRUE(constant.roots.empty());
    EXPECT_EQ(constant.unresolved_degree, 0U);

    try {
        (void)rational_roots(RationalPolynomial());
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
    }
}

TEST(RationalRoots, CompletenessOnRandomProducts)
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        // Product of linear factors with known roots times a random quadratic cofactor.
        RationalPolynomial f = random_polynomial(rng, 0, 2, false);
        std::uniform_int_distribution<int> count(0, 4);
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            const ExactRational root = small_rational(rng);
            f = f * RationalPolynomial({ExactRational(-root), q(1)});
            (void)root;
        }
        const auto r = rational_roots(f);
        for (const auto& root : r.roots) {
            EXPECT_EQ(poly_eval(f, root), 0);
        }
        EXPECT_EQ(r.roots.size() + r.unresolved_degree, f.degree());
        const auto again = rational_roots(r.cofactor);
        EXPECT_TRUE(again.roots.empty());
        EXPECT_EQ(again.unresolved_degree, r.unresolved_degree);
    }
}

TEST(ParsePolynomial, DescendingOrderAndErrors)
{
    const auto f = parse_polynomial("2, 0, -1/4");
    EXPECT_EQ(f.coefficient(2), q(2));
    EXPECT_EQ(f.coefficient(0), q(-1, 4));
    EXPECT_FALSE(f.is_monic());
    EXPECT_THROW((void)parse_polynomial("1,,2"), Error);
    EXPECT_THROW((void)parse_polynomial("1,0.5"), Error);
}
