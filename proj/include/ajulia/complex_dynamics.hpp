#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ajulia/connectivity.hpp"
#include "ajulia/error.hpp"

namespace ajulia {

/// A complex number as two doubles. Arithmetic is spelled out by hand so that the
/// operation sequence (and therefore every rounding) is fixed.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;

    friend constexpr bool operator==(const ComplexValue&, const ComplexValue&) = default;

    [[nodiscard]] constexpr double norm2() const noexcept { return re * re + im * im; }
    [[nodiscard]] double abs() const noexcept { return std::hypot(re, im); }
    [[nodiscard]] bool finite() const noexcept { return std::isfinite(re) && std::isfinite(im); }
};

[[nodiscard]] constexpr ComplexValue operator+(ComplexValue a, ComplexValue b) noexcept
{
    return {a.re + b.re, a.im + b.im};
}

[[nodiscard]] constexpr ComplexValue operator*(ComplexValue a, ComplexValue b) noexcept
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

/// z^2 + c. Every quadratic step in the library goes through here.
[[nodiscard]] constexpr ComplexValue square_add(ComplexValue z, ComplexValue c) noexcept
{
    return {z.re * z.re - z.im * z.im + c.re, 2.0 * z.re * z.im + c.im};
}

struct AlternatedParams {
    ComplexValue c1;
    ComplexValue c2;
};

struct OrbitRecord {
    std::vector<ComplexValue> points;
    bool escaped = false;
    std::optional<std::size_t> escape_index;
    double radius_used = 0.0;
};

namespace detail {

inline void require_finite(ComplexValue z, const char* what)
{
    if (!z.finite()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be finite");
    }
}

inline void require_params(const AlternatedParams& params)
{
    require_finite(params.c1, "c1");
    require_finite(params.c2, "c2");
}

} // namespace detail

/// Alternated orbit z_{k+1} = z_k^2 + c1 for even k and z_k^2 + c2 for odd k,
/// so z_1 = F1(z_0). With `swap_order` the roles flip (the P_{c2c1} orbit).
///
/// Stops as soon as |z_k| > radius or after max_iter steps; the escaping point is
/// kept as the last entry.
[[nodiscard]] inline OrbitRecord alternated_orbit(ComplexValue z0, const AlternatedParams& params,
                                                  std::size_t max_iter, double radius,
                                                  bool swap_order = false)
{
    if (max_iter < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorKind::InvalidArgument, "radius must be a positive finite number");
    }
    detail::require_finite(z0, "z0");
    detail::require_params(params);

    const ComplexValue first = swap_order ? params.c2 : params.c1;
    const ComplexValue second = swap_order ? params.c1 : params.c2;

    OrbitRecord orbit;
    orbit.radius_used = radius;
    orbit.points.reserve(std::min<std::size_t>(max_iter + 1, 4096));
    ComplexValue z = z0;
    for (std::size_t k = 0;; ++k) {
        orbit.points.push_back(z);
        if (z.abs() > radius) {
            orbit.escaped = true;
            orbit.escape_index = k;
            break;
        }
        if (k == max_iter) {
            break;
        }
        z = square_add(z, k % 2 == 0 ? first : second);
    }
    return orbit;
}

/// The auxiliary quartic F(z) = (z^2 + c1)^2 + c2, evaluated in factored form so that
/// its iterates are bit-identical to the even-indexed alternated terms.
struct QuarticMap {
    ComplexValue c1;
    ComplexValue c2;

    [[nodiscard]] constexpr ComplexValue operator()(ComplexValue z) const noexcept
    {
        return square_add(square_add(z, c1), c2);
    }
};

[[nodiscard]] inline QuarticMap quartic_compose(const AlternatedParams& params)
{
    return {params.c1, params.c2};
}

/// Principal square root, computed in a numerically stable form.
[[nodiscard]] inline ComplexValue principal_sqrt(ComplexValue w) noexcept
{
    if (w.re == 0.0 && w.im == 0.0) {
        return {0.0, 0.0};
    }
    const double m = w.abs();
    const double t = std::sqrt((m + std::abs(w.re)) / 2.0);
    if (w.re >= 0.0) {
        return {t, w.im / (2.0 * t)};
    }
    return {std::abs(w.im) / (2.0 * t), std::copysign(t, w.im)};
}

/// Critical points of the quartic: [0, +sqrt(-c1), -sqrt(-c1)].
[[nodiscard]] inline std::array<ComplexValue, 3> quartic_critical_points(ComplexValue c1)
{
    const ComplexValue s = principal_sqrt({-c1.re, -c1.im});
    return {ComplexValue{0.0, 0.0}, s, ComplexValue{-s.re, -s.im}};
}

/// max(2, 1 + 2|c1| + |c1^2 + c2|). Beyond this radius |F(z)| > |z| for the quartic.
[[nodiscard]] inline double escape_radius(const AlternatedParams& params)
{
    const ComplexValue constant = square_add(params.c1, params.c2);
    return std::max(2.0, 1.0 + 2.0 * params.c1.abs() + constant.abs());
}

/// Outcome of iterating the quartic from one critical point.
struct CriticalOrbit {
    ComplexValue start;
    std::optional<std::size_t> escape_index;
};

struct ComplexConnectivity {
    ConnectivityClass verdict;
    std::vector<CriticalOrbit> orbits;
    double radius = 0.0;
};

/// Classifies from an explicit list of starting points; `classify_connectivity`
/// feeds it the three quartic critical points.
[[nodiscard]] inline ComplexConnectivity classify_from_points(const AlternatedParams& params,
                                                              std::span<const ComplexValue> starts,
                                                              std::size_t max_iter)
{
    if (max_iter < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");
    }
    detail::require_params(params);
    const QuarticMap quartic = quartic_compose(params);
    const double radius = escape_radius(params);

    ComplexConnectivity result;
    result.radius = radius;
    for (const ComplexValue start : starts) {
        CriticalOrbit orbit{start, std::nullopt};
        ComplexValue z = start;
        for (std::size_t k = 0; k <= max_iter; ++k) {
            if (z.abs() > radius) {
                orbit.escape_index = k;
                break;
            }
            if (k < max_iter) {
                z = quartic(z);
            }
        }
        result.verdict.critical_orbit_escaped.push_back(orbit.escape_index.has_value());
        result.orbits.push_back(orbit);
    }
    result.verdict.value = trichotomy(result.verdict.critical_orbit_escaped);
    // A bounded claim rests on the iteration budget, not on a proof.
    result.verdict.decided_by = result.verdict.value == Connectivity::Connected
                                    ? DecidedBy::BudgetExhausted
                                    : DecidedBy::Simulation;
    return result;
}

[[nodiscard]] inline ComplexConnectivity classify_connectivity(const AlternatedParams& params,
                                                               std::size_t max_iter)
{
    const auto critical = quartic_critical_points(params.c1);
    return classify_from_points(params, critical, max_iter);
}

} // namespace ajulia
