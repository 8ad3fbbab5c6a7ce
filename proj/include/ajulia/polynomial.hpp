#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ajulia/error.hpp"
#include "ajulia/rational.hpp"

namespace ajulia {

/// Dense polynomial over Q. Coefficient k multiplies z^k; trailing zeros are trimmed so
/// the last stored coefficient is the leading one. The zero polynomial stores nothing.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<ExactRational> ascending) : coeffs_(std::move(ascending))
    {
        trim();
    }

    RationalPolynomial(std::initializer_list<ExactRational> ascending)
        : RationalPolynomial(std::vector<ExactRational>(ascending))
    {
    }

    /// Leading term first, the order polynomials are usually written in.
    static RationalPolynomial from_descending(std::vector<ExactRational> descending)
    {
        std::reverse(descending.begin(), descending.end());
        return RationalPolynomial(std::move(descending));
    }

    static RationalPolynomial constant(const ExactRational& c) { return RationalPolynomial({c}); }
    static RationalPolynomial identity() { return RationalPolynomial({ExactRational(0), ExactRational(1)}); }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; the zero polynomial reports 0.
    [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    /// Coefficient of z^k (zero beyond the degree).
    [[nodiscard]] ExactRational coefficient(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : ExactRational(0);
    }

    [[nodiscard]] ExactRational leading() const { return coeffs_.empty() ? ExactRational(0) : coeffs_.back(); }
    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    [[nodiscard]] const std::vector<ExactRational>& ascending() const noexcept { return coeffs_; }

    [[nodiscard]] std::vector<ExactRational> descending() const
    {
        return {coeffs_.rbegin(), coeffs_.rend()};
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        std::vector<ExactRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = a.coefficient(k) + b.coefficient(k);
        }
        return RationalPolynomial(std::move(out));
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return RationalPolynomial(std::move(out));
    }

    /// Comma-separated, leading coefficient first: "1,0,-1/2,0,9/16". Zero prints "0".
    [[nodiscard]] std::string to_string() const
    {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!out.empty()) {
                out += ',';
            }
            out += it->get_str();
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<ExactRational> coeffs_;
};

/// Parses a degree-descending, comma-separated list of exact rationals.
[[nodiscard]] inline RationalPolynomial parse_polynomial(std::string_view text)
{
    std::vector<ExactRational> descending;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        descending.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return RationalPolynomial::from_descending(std::move(descending));
}

/// Horner evaluation.
[[nodiscard]] inline ExactRational poly_eval(const RationalPolynomial& f, const ExactRational& x)
{
    const auto& c = f.ascending();
    ExactRational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// outer(inner(z)), expanded.
[[nodiscard]] inline RationalPolynomial poly_compose(const RationalPolynomial& outer,
                                                     const RationalPolynomial& inner)
{
    const auto& c = outer.ascending();
    RationalPolynomial acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner + RationalPolynomial::constant(*it);
    }
    return acc;
}

[[nodiscard]] inline RationalPolynomial poly_derivative(const RationalPolynomial& f)
{
    const auto& c = f.ascending();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<ExactRational> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        out[k - 1] = c[k] * static_cast<unsigned long>(k);
    }
    return RationalPolynomial(std::move(out));
}

struct RationalRoots {
    /// Roots with multiplicity, in discovery order: zero first, then candidates by
    /// increasing denominator, increasing numerator magnitude, positive before negative.
    std::vector<ExactRational> roots;
    /// Degree of the cofactor left after dividing out every rational root.
    std::size_t unresolved_degree = 0;
    RationalPolynomial cofactor;
};

namespace detail {

/// Positive divisors of |n| (n != 0). Trial division up to 10^6; a cofactor left over
/// after that is treated as indivisible, which can only hide roots of polynomials with
/// enormous coefficients.
inline std::vector<Integer> positive_divisors(const Integer& n)
{
    Integer rest = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (unsigned long d = 2; d <= 1000000UL; d = d == 2 ? 3 : d + 2) {
        if (Integer(d) * Integer(d) > rest) {
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            rest /= d;
            ++e;
        }
        if (e > 0) {
            factors.emplace_back(Integer(d), e);
        }
    }
    if (rest > 1) {
        factors.emplace_back(rest, 1U);
    }
    std::vector<Integer> divisors{Integer(1)};
    for (const auto& [prime, e] : factors) {
        const std::size_t count = divisors.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

/// Scales f to an integer polynomial with coprime coefficients.
inline std::vector<Integer> primitive_integer_form(const RationalPolynomial& f)
{
    Integer common_den = 1;
    for (const auto& c : f.ascending()) {
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<Integer> ints;
    Integer content = 0;
    for (const auto& c : f.ascending()) {
        Integer v = c.get_num() * (common_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    for (auto& v : ints) {
        v /= content;
    }
    return ints;
}

/// Quotient of f by (z - r); r must be a root.
inline RationalPolynomial deflate(const RationalPolynomial& f, const ExactRational& r)
{
    const auto& c = f.ascending();
    std::vector<ExactRational> q(c.size() - 1);
    ExactRational carry(0);
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        carry = carry * r + c[k];
        q[k - 1] = carry;
    }
    return RationalPolynomial(std::move(q));
}

/// Some rational root of f with nonzero constant term, by the rational-root theorem.
inline std::optional<ExactRational> find_rational_root(const RationalPolynomial& f)
{
    if (f.degree() == 0) {
        return std::nullopt;
    }
    const auto ints = primitive_integer_form(f);
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    for (const auto& den : dens) {
        for (const auto& num : nums) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) {
                continue;
            }
            for (const int sign : {1, -1}) {
                ExactRational candidate(sign > 0 ? num : Integer(-num), den);
                if (sgn(poly_eval(f, candidate)) == 0) {
                    return candidate;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Every rational root of f, found by repeated rational-root search and deflation.
[[nodiscard]] inline RationalRoots rational_roots(const RationalPolynomial& f)
{
    if (f.is_zero()) {
        throw Error(ErrorKind::ZeroPolynomial, "rational_roots of the zero polynomial");
    }
    RationalRoots out;
    RationalPolynomial rest = f;
    while (rest.degree() > 0 && sgn(rest.coefficient(0)) == 0) {
        out.roots.emplace_back(0);
        rest = detail::deflate(rest, ExactRational(0));
    }
    while (auto root = detail::find_rational_root(rest)) {
        do {
            out.roots.push_back(*root);
            rest = detail::deflate(rest, *root);
        } while (rest.degree() > 0 && sgn(poly_eval(rest, *root)) == 0);
    }
    out.unresolved_degree = rest.degree();
    out.cofactor = std::move(rest);
    return out;
}

/// Roots without repetition, first-occurrence order preserved.
[[nodiscard]] inline std::vector<ExactRational> distinct(const std::vector<ExactRational>& values)
{
    std::vector<ExactRational> out;
    for (const auto& v : values) {
        if (std::find(out.begin(), out.end(), v) == out.end()) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace ajulia
