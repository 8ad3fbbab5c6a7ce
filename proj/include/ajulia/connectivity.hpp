#pragma once

#include <algorithm>
#include <string_view>
#include <vector>

namespace ajulia {

enum class Connectivity { Connected, Disconnected, TotallyDisconnected, Undetermined };

/// How a connectivity verdict was reached.
enum class DecidedBy { Theorem, Simulation, BudgetExhausted };

struct ConnectivityClass {
    Connectivity value = Connectivity::Undetermined;
    DecidedBy decided_by = DecidedBy::Simulation;
    /// One entry per critical point, true when that critical orbit was seen to escape.
    std::vector<bool> critical_orbit_escaped;
};

[[nodiscard]] constexpr std::string_view to_string(Connectivity c) noexcept
{
    switch (c) {
    case Connectivity::Connected: return "connected";
    case Connectivity::Disconnected: return "disconnected";
    case Connectivity::TotallyDisconnected: return "totally-disconnected";
    case Connectivity::Undetermined: return "undetermined";
    }
    return "undetermined";
}

[[nodiscard]] constexpr std::string_view to_string(DecidedBy d) noexcept
{
    switch (d) {
    case DecidedBy::Theorem: return "theorem";
    case DecidedBy::Simulation: return "simulation";
    case DecidedBy::BudgetExhausted: return "budget-exhausted";
    }
    return "simulation";
}

/// Critical-orbit trichotomy: none escaped, some escaped, all escaped.
[[nodiscard]] inline Connectivity trichotomy(const std::vector<bool>& escaped)
{
    const auto n = std::count(escaped.begin(), escaped.end(), true);
    if (n == 0) {
        return Connectivity::Connected;
    }
    if (static_cast<std::size_t>(n) == escaped.size()) {
        return Connectivity::TotallyDisconnected;
    }
    return Connectivity::Disconnected;
}

} // namespace ajulia
