#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ajulia/connectivity.hpp"
#include "ajulia/error.hpp"
#include "ajulia/polynomial.hpp"
#include "ajulia/rational.hpp"

namespace ajulia {

/// Budgets for exact orbit iteration. `max_iter` counts map applications; `size_budget`
/// caps the bit length of any numerator or denominator.
struct OrbitLimits {
    std::size_t max_iter = 1000;
    std::size_t size_budget = 1'000'000;
};

enum class OrbitStatus { BoundedProved, UnboundedProved, Unknown };

[[nodiscard]] constexpr std::string_view to_string(OrbitStatus s) noexcept
{
    switch (s) {
    case OrbitStatus::BoundedProved: return "bounded-proved";
    case OrbitStatus::UnboundedProved: return "unbounded-proved";
    case OrbitStatus::Unknown: return "unknown";
    }
    return "unknown";
}

/// points[entry] == points[entry + length].
struct CycleWitness {
    std::size_t entry = 0;
    std::size_t length = 0;
};

/// |points[index]|_p = magnitude > bound.
struct EscapeWitness {
    std::size_t index = 0;
    PAdicMagnitude magnitude;
    PAdicMagnitude bound;
};

enum class BudgetReason { Iterations, Size };

struct BudgetWitness {
    std::size_t iterations = 0;
    BudgetReason reason = BudgetReason::Iterations;
};

struct PAdicOrbitVerdict {
    OrbitStatus status = OrbitStatus::Unknown;
    std::optional<CycleWitness> cycle;
    std::optional<EscapeWitness> escape;
    std::optional<BudgetWitness> budget;
    /// Every iterate computed, starting with z0.
    std::vector<ExactRational> points;

    /// Map applications performed.
    [[nodiscard]] std::size_t iterations() const noexcept
    {
        return points.empty() ? 0 : points.size() - 1;
    }
};

namespace detail {

inline void require_dynamic_polynomial(const RationalPolynomial& f, std::string_view name)
{
    if (f.degree() < 2) {
        throw Error(ErrorKind::DegreeTooLow, std::string(name) + " must have degree at least 2");
    }
    if (!f.is_monic()) {
        throw Error(ErrorKind::NotMonic, std::string(name) + " must be monic");
    }
}

inline void require_limits(const OrbitLimits& limits)
{
    if (limits.max_iter < 1 || limits.size_budget < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_iter and size_budget must be positive");
    }
}

} // namespace detail

/// B = max(1, |a_k|_p over the non-leading coefficients). For a monic F and |z|_p > B,
/// the leading term dominates and |F(z)|_p = |z|_p^deg > |z|_p.
[[nodiscard]] inline PAdicMagnitude escape_bound_p(const RationalPolynomial& f, const Prime& p)
{
    detail::require_dynamic_polynomial(f, "F");
    PAdicMagnitude bound = PAdicMagnitude::one(p.value());
    for (std::size_t k = 0; k < f.degree(); ++k) {
        bound = std::max(bound, abs_p(f.coefficient(k), p));
    }
    return bound;
}

/// Exact forward orbit of z0 under F over Q, judged with the p-adic norm.
///
/// UnboundedProved as soon as an iterate exceeds escape_bound_p; BoundedProved on an exact
/// repeat; Unknown when either budget runs out first.
[[nodiscard]] inline PAdicOrbitVerdict orbit_classify_p(const RationalPolynomial& f,
                                                        const ExactRational& z0, const Prime& p,
                                                        const OrbitLimits& limits = {})
{
    detail::require_limits(limits);
    const PAdicMagnitude bound = escape_bound_p(f, p);

    PAdicOrbitVerdict verdict;
    std::map<ExactRational, std::size_t> seen;
    ExactRational z = z0;
    for (std::size_t k = 0;; ++k) {
        verdict.points.push_back(z);
        const PAdicMagnitude magnitude = abs_p(z, p);
        if (magnitude > bound) {
            verdict.status = OrbitStatus::UnboundedProved;
            verdict.escape = EscapeWitness{k, magnitude, bound};
            return verdict;
        }
        if (const auto it = seen.find(z); it != seen.end()) {
            verdict.status = OrbitStatus::BoundedProved;
            verdict.cycle = CycleWitness{it->second, k - it->second};
            return verdict;
        }
        seen.emplace(z, k);
        if (bit_length(z) > limits.size_budget) {
            verdict.budget = BudgetWitness{k, BudgetReason::Size};
            return verdict;
        }
        if (k == limits.max_iter) {
            verdict.budget = BudgetWitness{k, BudgetReason::Iterations};
            return verdict;
        }
        z = poly_eval(f, z);
    }
}

/// Alternated orbit z_{2i+1} = F1(z_{2i}), z_{2i+2} = F2(z_{2i+1}). Escape is judged on the
/// even terms against the bound of F = F2∘F1; cycles are exact repeats at equal parity.
/// `limits.max_iter` counts single-map applications.
[[nodiscard]] inline PAdicOrbitVerdict alternated_orbit_p(const ExactRational& z0,
                                                          const RationalPolynomial& f1,
                                                          const RationalPolynomial& f2,
                                                          const Prime& p,
                                                          const OrbitLimits& limits = {})
{
    detail::require_dynamic_polynomial(f1, "F1");
    detail::require_dynamic_polynomial(f2, "F2");
    detail::require_limits(limits);
    const PAdicMagnitude bound = escape_bound_p(poly_compose(f2, f1), p);

    PAdicOrbitVerdict verdict;
    std::map<ExactRational, std::size_t> seen[2];
    ExactRational z = z0;
    for (std::size_t k = 0;; ++k) {
        verdict.points.push_back(z);
        const bool even = k % 2 == 0;
        if (even) {
            const PAdicMagnitude magnitude = abs_p(z, p);
            if (magnitude > bound) {
                verdict.status = OrbitStatus::UnboundedProved;
                verdict.escape = EscapeWitness{k, magnitude, bound};
                return verdict;
            }
        }
        auto& same_parity = seen[k % 2];
        if (const auto it = same_parity.find(z); it != same_parity.end()) {
            verdict.status = OrbitStatus::BoundedProved;
            verdict.cycle = CycleWitness{it->second, k - it->second};
            return verdict;
        }
        same_parity.emplace(z, k);
        if (bit_length(z) > limits.size_budget) {
            verdict.budget = BudgetWitness{k, BudgetReason::Size};
            return verdict;
        }
        if (k == limits.max_iter) {
            verdict.budget = BudgetWitness{k, BudgetReason::Iterations};
            return verdict;
        }
        z = poly_eval(even ? f1 : f2, z);
    }
}

enum class Membership { Yes, No, Unknown };

enum class MembershipRule { PolyDiskTheorem, UnitDiskTheorem, CriticalOrbitSimulation, BudgetExhausted };

[[nodiscard]] constexpr std::string_view to_string(Membership m) noexcept
{
    switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::Unknown: return "unknown";
    }
    return "unknown";
}

[[nodiscard]] constexpr std::string_view to_string(MembershipRule r) noexcept
{
    switch (r) {
    case MembershipRule::PolyDiskTheorem: return "poly-disk-theorem";
    case MembershipRule::UnitDiskTheorem: return "unit-disk-theorem";
    case MembershipRule::CriticalOrbitSimulation: return "critical-orbit-simulation";
    case MembershipRule::BudgetExhausted: return "budget-exhausted";
    }
    return "budget-exhausted";
}

struct CriticalOrbitVerdict {
    ExactRational point;
    PAdicOrbitVerdict verdict;
};

struct MandelbrotVerdict {
    Membership member = Membership::Unknown;
    MembershipRule decided_by = MembershipRule::CriticalOrbitSimulation;
    std::vector<CriticalOrbitVerdict> critical_orbits;
    /// Degree of the part of F_v' with no rational roots.
    std::size_t unresolved_degree = 0;
};

/// M_p^2 is the closed unit disk: c is a member iff |c|_p <= 1.
[[nodiscard]] inline MandelbrotVerdict mandelbrot_member_quadratic(const ExactRational& c, const Prime& p)
{
    MandelbrotVerdict verdict;
    verdict.member = abs_p(c, p) <= PAdicMagnitude::one(p.value()) ? Membership::Yes : Membership::No;
    verdict.decided_by = MembershipRule::UnitDiskTheorem;
    return verdict;
}

/// F_v(z) = z^d + v[0] z^(d-2) + ... + v[d-2], with d = v.size() + 1.
[[nodiscard]] inline RationalPolynomial normal_form_polynomial(const std::vector<ExactRational>& v)
{
    if (v.empty()) {
        throw Error(ErrorKind::DegreeTooLow, "coefficient vector must have at least one entry");
    }
    const std::size_t d = v.size() + 1;
    std::vector<ExactRational> ascending(d + 1);
    ascending[d] = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ascending[d - 2 - i] = v[i];
    }
    return RationalPolynomial(std::move(ascending));
}

namespace detail {

/// Runs orbit_classify_p from every distinct rational critical point of f.
inline std::vector<CriticalOrbitVerdict> critical_orbits(const RationalPolynomial& f,
                                                         const std::vector<ExactRational>& points,
                                                         const Prime& p, const OrbitLimits& limits)
{
    std::vector<CriticalOrbitVerdict> out;
    for (const auto& c : distinct(points)) {
        out.push_back({c, orbit_classify_p(f, c, p, limits)});
    }
    return out;
}

inline bool any_status(const std::vector<CriticalOrbitVerdict>& orbits, OrbitStatus s)
{
    return std::any_of(orbits.begin(), orbits.end(),
                       [s](const CriticalOrbitVerdict& o) { return o.verdict.status == s; });
}

inline bool within_unit_disk(const ExactRational& x, const Prime& p)
{
    return abs_p(x, p) <= PAdicMagnitude::one(p.value());
}

} // namespace detail

/// Membership of v in M_p^d. For p >= d the poly-disk theorem decides; otherwise every
/// critical orbit of F_v is simulated exactly.
[[nodiscard]] inline MandelbrotVerdict mandelbrot_member(const std::vector<ExactRational>& v, const Prime& p,
                                                         const OrbitLimits& limits = {})
{
    const RationalPolynomial f = normal_form_polynomial(v);
    const std::size_t d = f.degree();
    if (d == 2) {
        return mandelbrot_member_quadratic(v.front(), p);
    }

    MandelbrotVerdict verdict;
    if (p.value() >= d) {
        const bool inside = std::all_of(v.begin(), v.end(),
                                        [&](const ExactRational& c) { return detail::within_unit_disk(c, p); });
        verdict.member = inside ? Membership::Yes : Membership::No;
        verdict.decided_by = MembershipRule::PolyDiskTheorem;
        return verdict;
    }

    const RationalRoots critical = rational_roots(poly_derivative(f));
    verdict.unresolved_degree = critical.unresolved_degree;
    verdict.decided_by = MembershipRule::CriticalOrbitSimulation;
    if (critical.unresolved_degree > 0) {
        verdict.member = Membership::Unknown;
        return verdict;
    }
    verdict.critical_orbits = detail::critical_orbits(f, critical.roots, p, limits);
    if (detail::any_status(verdict.critical_orbits, OrbitStatus::UnboundedProved)) {
        verdict.member = Membership::No;
    } else if (detail::any_status(verdict.critical_orbits, OrbitStatus::Unknown)) {
        verdict.member = Membership::Unknown;
        verdict.decided_by = MembershipRule::BudgetExhausted;
    } else {
        verdict.member = Membership::Yes;
    }
    return verdict;
}

struct PAdicConnectivity {
    ConnectivityClass verdict;
    RationalPolynomial composed;
    std::vector<CriticalOrbitVerdict> critical_orbits;
    std::size_t unresolved_degree = 0;
    /// Total map applications over all critical orbits; zero on the theorem path.
    std::size_t iterations = 0;
};

/// True when F is monic of degree <= p, has no z^(deg-1) term, and every coefficient has
/// |.|_p <= 1. Under these conditions the filled Julia set of F is connected.
[[nodiscard]] inline bool connectivity_theorem_applies(const RationalPolynomial& f, const Prime& p)
{
    const std::size_t d = f.degree();
    if (!f.is_monic() || d < 2 || d > p.value()) {
        return false;
    }
    if (sgn(f.coefficient(d - 1)) != 0) {
        return false;
    }
    const auto& c = f.ascending();
    return std::all_of(c.begin(), c.end(), [&](const ExactRational& a) { return detail::within_unit_disk(a, p); });
}

/// Connectivity of the p-adic alternated Julia set of F1 and F2, read off the filled
/// Julia set of F = F2∘F1.
[[nodiscard]] inline PAdicConnectivity classify_alternated_padic(const RationalPolynomial& f1,
                                                                 const RationalPolynomial& f2,
                                                                 const Prime& p,
                                                                 const OrbitLimits& limits = {})
{
    detail::require_dynamic_polynomial(f1, "F1");
    detail::require_dynamic_polynomial(f2, "F2");
    detail::require_limits(limits);

    PAdicConnectivity result;
    result.composed = poly_compose(f2, f1);
    if (connectivity_theorem_applies(result.composed, p)) {
        result.verdict.value = Connectivity::Connected;
        result.verdict.decided_by = DecidedBy::Theorem;
        return result;
    }

    const RationalRoots critical = rational_roots(poly_derivative(result.composed));
    result.unresolved_degree = critical.unresolved_degree;
    result.critical_orbits = detail::critical_orbits(result.composed, critical.roots, p, limits);
    for (const auto& orbit : result.critical_orbits) {
        result.iterations += orbit.verdict.iterations();
        result.verdict.critical_orbit_escaped.push_back(orbit.verdict.status == OrbitStatus::UnboundedProved);
    }

    result.verdict.decided_by = DecidedBy::Simulation;
    if (detail::any_status(result.critical_orbits, OrbitStatus::Unknown)) {
        result.verdict.value = Connectivity::Undetermined;
        result.verdict.decided_by = DecidedBy::BudgetExhausted;
    } else if (critical.unresolved_degree > 0) {
        result.verdict.value = Connectivity::Undetermined;
    } else {
        result.verdict.value = trichotomy(result.verdict.critical_orbit_escaped);
    }
    return result;
}

} // namespace ajulia
