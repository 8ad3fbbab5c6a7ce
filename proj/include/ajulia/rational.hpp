#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "ajulia/error.hpp"

namespace ajulia {

using Integer = mpz_class;

/// Exact rational in lowest terms with a positive denominator. GMP keeps mpq_class
/// canonical after every arithmetic operation.
using ExactRational = mpq_class;

/// A prime modulus. Values below 2^31 are checked by trial division; larger values are
/// accepted unchecked and carry a warning.
class Prime {
public:
    static constexpr std::uint64_t verified_limit = std::uint64_t{1} << 31;

    explicit Prime(std::uint64_t value) : value_(value)
    {
        if (value < verified_limit) {
            if (!is_small_prime(value)) {
                throw Error(ErrorKind::NotPrime, std::to_string(value) + " is not prime");
            }
            verified_ = true;
        }
    }

    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] bool verified() const noexcept { return verified_; }

    [[nodiscard]] std::optional<std::string> warning() const
    {
        if (verified_) {
            return std::nullopt;
        }
        return std::to_string(value_) + " is above 2^31; primality was not checked";
    }

    [[nodiscard]] Integer as_integer() const
    {
        Integer z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(value_), 0, 0, &value_);
        return z;
    }

    friend bool operator==(const Prime&, const Prime&) = default;

    static bool is_small_prime(std::uint64_t n) noexcept
    {
        if (n < 2) {
            return false;
        }
        if (n % 2 == 0) {
            return n == 2;
        }
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }

private:
    std::uint64_t value_;
    bool verified_ = false;
};

/// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::int64_t v) : value_(v), infinite_(false) {}

    static constexpr Valuation infinity() noexcept
    {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    [[nodiscard]] constexpr bool is_infinite() const noexcept { return infinite_; }

    /// Finite value; zero when infinite, so check is_infinite() first.
    [[nodiscard]] constexpr std::int64_t value() const noexcept { return infinite_ ? 0 : value_; }

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) noexcept
    {
        return a.infinite_ == b.infinite_ && a.value() == b.value();
    }

    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) noexcept
    {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return Valuation(a.value_ + b.value_);
    }

    [[nodiscard]] std::string to_string() const
    {
        return infinite_ ? std::string("inf") : std::to_string(value_);
    }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

namespace detail {

/// Exponent of p in a nonzero integer.
inline std::int64_t integer_valuation(const Integer& n, const Integer& p)
{
    if (n == 0) {
        return 0;
    }
    Integer rest;
    const auto count = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return static_cast<std::int64_t>(count);
}

} // namespace detail

/// v_p(x) = v_p(numerator) - v_p(denominator); infinite for x = 0.
[[nodiscard]] inline Valuation vp(const ExactRational& x, const Prime& p)
{
    if (sgn(x) == 0) {
        return Valuation::infinity();
    }
    const Integer prime = p.as_integer();
    return Valuation(detail::integer_valuation(x.get_num(), prime) -
                     detail::integer_valuation(x.get_den(), prime));
}

/// Exact p-adic absolute value p^(-v). Ordered by value: a larger valuation is a smaller
/// magnitude, and zero is below everything. Magnitudes for different primes do not compare.
class PAdicMagnitude {
public:
    PAdicMagnitude(std::uint64_t p, Valuation v) : p_(p), valuation_(v) {}

    static PAdicMagnitude one(std::uint64_t p) { return {p, Valuation(0)}; }
    static PAdicMagnitude zero(std::uint64_t p) { return {p, Valuation::infinity()}; }
    /// The magnitude p^e.
    static PAdicMagnitude power(std::uint64_t p, std::int64_t e) { return {p, Valuation(-e)}; }

    [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }
    [[nodiscard]] Valuation valuation() const noexcept { return valuation_; }
    [[nodiscard]] bool is_zero() const noexcept { return valuation_.is_infinite(); }

    /// log_p of the magnitude, i.e. -v. Meaningless for zero.
    [[nodiscard]] std::int64_t log_p() const noexcept { return -valuation_.value(); }

    friend bool operator==(const PAdicMagnitude& a, const PAdicMagnitude& b)
    {
        return a.p_ == b.p_ && a.valuation_ == b.valuation_;
    }

    friend std::strong_ordering operator<=>(const PAdicMagnitude& a, const PAdicMagnitude& b)
    {
        if (a.p_ != b.p_) {
            throw Error(ErrorKind::InvalidArgument, "cannot compare magnitudes for different primes");
        }
        return b.valuation_ <=> a.valuation_;
    }

    friend PAdicMagnitude operator*(const PAdicMagnitude& a, const PAdicMagnitude& b)
    {
        if (a.p_ != b.p_) {
            throw Error(ErrorKind::InvalidArgument, "cannot multiply magnitudes for different primes");
        }
        return {a.p_, a.valuation_ + b.valuation_};
    }

    /// "0", "1", "2^16" or "2^-3".
    [[nodiscard]] std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        if (log_p() == 0) {
            return "1";
        }
        return std::to_string(p_) + "^" + std::to_string(log_p());
    }

private:
    std::uint64_t p_;
    Valuation valuation_;
};

[[nodiscard]] inline PAdicMagnitude abs_p(const ExactRational& x, const Prime& p)
{
    return {p.value(), vp(x, p)};
}

/// Larger of numerator and denominator bit lengths.
[[nodiscard]] inline std::size_t bit_length(const ExactRational& x)
{
    const auto num = x.get_num();
    const auto den = x.get_den();
    return std::max(num == 0 ? std::size_t{0} : mpz_sizeinbase(num.get_mpz_t(), 2),
                    mpz_sizeinbase(den.get_mpz_t(), 2));
}

[[nodiscard]] inline std::string to_string(const ExactRational& x)
{
    return x.get_str();
}

namespace detail {

inline std::string_view trim(std::string_view s) noexcept
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline bool all_digits(std::string_view s) noexcept
{
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace detail

/// Parses "a" or "a/b" with an optional leading sign. Decimal points and exponents are
/// rejected: p-adic inputs must be exact.
[[nodiscard]] inline ExactRational parse_rational(std::string_view text)
{
    std::string_view s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
        throw Error(ErrorKind::Parse, "not an exact rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    }
    ExactRational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

} // namespace ajulia
