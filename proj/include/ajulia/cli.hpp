#pragma once

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ajulia/complex_dynamics.hpp"
#include "ajulia/config.hpp"
#include "ajulia/error.hpp"
#include "ajulia/padic_dynamics.hpp"
#include "ajulia/polynomial.hpp"
#include "ajulia/rational.hpp"
#include "ajulia/render.hpp"

namespace ajulia::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int { Success = 0, IoFailure = 1, UsageError = 2, InvalidPrime = 3 };

[[nodiscard]] inline int exit_code_for(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::IoFailure: return IoFailure;
    case ErrorKind::NotPrime: return InvalidPrime;
    default: return UsageError;
    }
}

/// Shortest round-trip decimal form; integral values keep a trailing ".0".
[[nodiscard]] inline std::string format_double(double value)
{
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    std::string s(buf, result.ptr);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

[[nodiscard]] inline ComplexValue parse_complex(std::string_view text)
{
    const std::string_view s = detail::trim(text);
    const auto comma = s.find(',');
    auto parse_part = [&](std::string_view part) {
        part = detail::trim(part);
        if (!part.empty() && part.front() == '+') {
            part.remove_prefix(1);
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || !std::isfinite(v)) {
            throw Error(ErrorKind::Parse, "expected \"re,im\" decimals, got '" + std::string(text) + "'");
        }
        return v;
    };
    if (comma == std::string_view::npos) {
        throw Error(ErrorKind::Parse, "expected \"re,im\" decimals, got '" + std::string(text) + "'");
    }
    return {parse_part(s.substr(0, comma)), parse_part(s.substr(comma + 1))};
}

[[nodiscard]] inline std::vector<ExactRational> parse_rational_list(std::string_view text)
{
    std::vector<ExactRational> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

[[nodiscard]] inline std::string join(const std::vector<ExactRational>& values, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : std::string(sep)) + values[i].get_str();
    }
    return out;
}

[[nodiscard]] inline std::string describe(const PAdicOrbitVerdict& v)
{
    std::string out(to_string(v.status));
    if (v.cycle) {
        out += " cycle_entry=" + std::to_string(v.cycle->entry) + " cycle_length=" + std::to_string(v.cycle->length);
    }
    if (v.escape) {
        out += " escape_index=" + std::to_string(v.escape->index) + " magnitude=" + v.escape->magnitude.to_string() +
               " bound=" + v.escape->bound.to_string();
    }
    if (v.budget) {
        out += " iterations=" + std::to_string(v.budget->iterations) +
               (v.budget->reason == BudgetReason::Size ? " reason=size-budget" : " reason=iteration-budget");
    }
    return out;
}

/// Typed, validated view over a merged RunConfig.
class Settings {
public:
    explicit Settings(const RunConfig& config) : config_(config) {}

    [[nodiscard]] bool has(const std::string& key) const { return config_.has(key); }

    [[nodiscard]] const std::string& text(const std::string& key) const
    {
        const auto it = config_.values.find(key);
        if (it == config_.values.end()) {
            throw Error(ErrorKind::InvalidArgument, "missing required option --" + key);
        }
        return it->second;
    }

    [[nodiscard]] std::string text(const std::string& key, const std::string& fallback) const
    {
        return has(key) ? text(key) : fallback;
    }

    [[nodiscard]] std::uint64_t count(const std::string& key, std::uint64_t fallback) const
    {
        if (!has(key)) {
            return fallback;
        }
        return parse_count(key, text(key));
    }

    [[nodiscard]] double real(const std::string& key, double fallback) const
    {
        if (!has(key)) {
            return fallback;
        }
        const std::string_view s = detail::trim(text(key));
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw Error(ErrorKind::Parse, "--" + key + " expects a decimal number");
        }
        return v;
    }

    [[nodiscard]] bool flag(const std::string& key) const
    {
        if (!has(key)) {
            return false;
        }
        const std::string& v = text(key);
        if (v == "true" || v == "1") {
            return true;
        }
        if (v == "false" || v == "0") {
            return false;
        }
        throw Error(ErrorKind::Parse, "--" + key + " expects true or false");
    }

    [[nodiscard]] ComplexValue complex(const std::string& key) const { return parse_complex(text(key)); }

    [[nodiscard]] ComplexValue complex(const std::string& key, ComplexValue fallback) const
    {
        return has(key) ? parse_complex(text(key)) : fallback;
    }

    [[nodiscard]] RationalPolynomial polynomial(const std::string& key) const { return parse_polynomial(text(key)); }

    [[nodiscard]] Prime prime(const std::string& key) const
    {
        return Prime(parse_count(key, text(key), /*allow_zero=*/true));
    }

    [[nodiscard]] OrbitLimits limits(std::uint64_t default_iter) const
    {
        return {count("max-iter", default_iter), count("size-budget", 1'000'000)};
    }

private:
    static std::uint64_t parse_count(const std::string& key, std::string_view raw, bool allow_zero = false)
    {
        const std::string_view s = detail::trim(raw);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw Error(ErrorKind::Parse, "--" + key + " expects a nonnegative integer");
        }
        if (v == 0 && !allow_zero) {
            throw Error(ErrorKind::InvalidArgument, "--" + key + " must be positive");
        }
        return v;
    }

    const RunConfig& config_;
};

struct OptionSpec {
    std::string key;
    std::string help;
    bool is_flag = false;
};

using Handler = std::function<void(const Settings&, std::ostream& out, std::ostream& err)>;

struct CommandSpec {
    std::string name;
    std::string help;
    std::vector<OptionSpec> options;
    Handler handler;
};

namespace detail {

inline std::ofstream open_output(const std::string& path)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::IoFailure, "cannot open '" + path + "' for writing");
    }
    return file;
}

inline void warn_prime(const Prime& p, std::ostream& err)
{
    if (const auto w = p.warning()) {
        err << "warning: " << *w << '\n';
    }
}

inline ViewPort view_from(const Settings& s, double default_center_x)
{
    const std::uint64_t width = s.count("width", 800);
    const std::uint64_t height = s.count("height", 800);
    ViewPort view = ViewPort::default_window(width, height);
    view.zoom = s.real("zoom", view.zoom);
    view.center_x = s.real("center-x", default_center_x);
    view.center_y = s.real("center-y", 0.0);
    return view;
}

inline RenderOptions render_options_from(const Settings& s)
{
    RenderOptions options;
    const std::uint64_t max_iter = s.count("max-iter", 256);
    if (max_iter > UINT32_MAX) {
        throw Error(ErrorKind::InvalidArgument, "--max-iter is too large");
    }
    options.max_iter = static_cast<std::uint32_t>(max_iter);
    options.threshold = s.real("threshold", 4.0);
    options.swap_order = s.flag("swap-order");
    options.lanes = s.count("lanes", std::max(1U, std::thread::hardware_concurrency()));
    return options;
}

inline Palette palette_from(const Settings& s)
{
    const std::string name = s.text("palette", "grayscale");
    if (name == "grayscale") {
        return Palette::Grayscale;
    }
    if (name == "smooth") {
        return Palette::Smooth;
    }
    throw Error(ErrorKind::InvalidArgument, "--palette must be grayscale or smooth");
}

inline void report_image(const EscapeImage& image, std::ostream& out)
{
    char line[128];
    std::snprintf(line, sizeof(line), "pixels=%zu escaped_fraction=%.6f\n", image.counts.size(),
                  image.escaped_fraction());
    out << line;
}

inline void cmd_render(const Settings& s, std::ostream& out, std::ostream&)
{
    const AlternatedParams params{s.complex("c1"), s.complex("c2")};
    const ViewPort view = view_from(s, 0.0);
    const std::string path = s.text("out");
    const EscapeImage image = render_alternated(view, params, render_options_from(s));
    write_ppm(image, path, palette_from(s));
    report_image(image, out);
}

inline void cmd_mandelbrot(const Settings& s, std::ostream& out, std::ostream&)
{
    const ViewPort view = view_from(s, -0.5);
    const std::string path = s.text("out");
    const EscapeImage image = render_mandelbrot(view, render_options_from(s));
    write_ppm(image, path, palette_from(s));
    report_image(image, out);
}

inline void cmd_classify_complex(const Settings& s, std::ostream& out, std::ostream&)
{
    const AlternatedParams params{s.complex("c1"), s.complex("c2")};
    const ComplexConnectivity result = classify_connectivity(params, s.count("max-iter", 1000));
    out << to_string(result.verdict.value) << '\n';
    out << "decided-by " << to_string(result.verdict.decided_by) << '\n';
    out << "escape-radius " << format_double(result.radius) << '\n';
    for (std::size_t i = 0; i < result.orbits.size(); ++i) {
        const auto& orbit = result.orbits[i];
        out << "critical " << i << ' ' << format_double(orbit.start.re) << ',' << format_double(orbit.start.im)
            << " escape_index="
            << (orbit.escape_index ? std::to_string(*orbit.escape_index) : std::string("none")) << '\n';
    }
}

inline void print_critical_orbits(const std::vector<CriticalOrbitVerdict>& orbits, std::ostream& out)
{
    for (const auto& orbit : orbits) {
        out << "critical " << orbit.point.get_str() << ' ' << describe(orbit.verdict) << '\n';
    }
}

inline void cmd_classify_padic(const Settings& s, std::ostream& out, std::ostream& err)
{
    const RationalPolynomial f1 = s.polynomial("f1");
    const RationalPolynomial f2 = s.polynomial("f2");
    const Prime p = s.prime("p");
    warn_prime(p, err);
    const PAdicConnectivity result = classify_alternated_padic(f1, f2, p, s.limits(1000));
    out << to_string(result.verdict.value) << " (" << to_string(result.verdict.decided_by) << ")\n";
    out << "composed " << result.composed.to_string() << '\n';
    print_critical_orbits(result.critical_orbits, out);
    if (result.unresolved_degree > 0) {
        out << "unresolved-degree " << result.unresolved_degree << '\n';
    }
}

inline void cmd_mandelbrot_member(const Settings& s, std::ostream& out, std::ostream& err)
{
    const std::vector<ExactRational> v = parse_rational_list(s.text("v"));
    const Prime p = s.prime("p");
    warn_prime(p, err);
    const MandelbrotVerdict verdict = mandelbrot_member(v, p, s.limits(1000));
    out << to_string(verdict.member) << " (" << to_string(verdict.decided_by) << ")\n";
    print_critical_orbits(verdict.critical_orbits, out);
    if (verdict.unresolved_degree > 0) {
        out << "unresolved-degree " << verdict.unresolved_degree << '\n';
    }
}

inline void cmd_compose(const Settings& s, std::ostream& out, std::ostream&)
{
    const RationalPolynomial composed = poly_compose(s.polynomial("f2"), s.polynomial("f1"));
    out << composed.to_string() << '\n';
    const RationalPolynomial derivative = poly_derivative(composed);
    if (derivative.is_zero()) {
        out << "critical points: none\n";
        return;
    }
    const RationalRoots roots = rational_roots(derivative);
    out << "critical points: " << (roots.roots.empty() ? std::string("none") : join(distinct(roots.roots), ", "))
        << '\n';
    if (roots.unresolved_degree > 0) {
        out << "unresolved-degree " << roots.unresolved_degree << '\n';
    }
}

inline void cmd_orbit_trace(const Settings& s, std::ostream& out, std::ostream& err)
{
    const std::string mode = s.text("mode");
    const std::string path = s.text("out");
    if (mode == "complex") {
        const AlternatedParams params{s.complex("c1"), s.complex("c2")};
        const ComplexValue z0 = s.complex("z0", {0.0, 0.0});
        const double radius = s.real("radius", escape_radius(params));
        const OrbitRecord orbit =
            alternated_orbit(z0, params, s.count("max-iter", 100), radius, s.flag("swap-order"));
        std::string csv = "index,re,im,abs\n";
        for (std::size_t k = 0; k < orbit.points.size(); ++k) {
            const ComplexValue z = orbit.points[k];
            csv += std::to_string(k) + ',' + format_double(z.re) + ',' + format_double(z.im) + ',' +
                   format_double(z.abs()) + '\n';
        }
        auto file = open_output(path);
        file << csv;
        if (!file.flush()) {
            throw Error(ErrorKind::IoFailure, "failed writing '" + path + "'");
        }
        out << "points=" << orbit.points.size() << " escaped=" << (orbit.escaped ? "yes" : "no")
            << " escape_index=" << (orbit.escape_index ? std::to_string(*orbit.escape_index) : std::string("none"))
            << '\n';
        return;
    }
    if (mode != "padic") {
        throw Error(ErrorKind::InvalidArgument, "--mode must be complex or padic");
    }
    const ExactRational z0 = parse_rational(s.text("z0", "0"));
    const RationalPolynomial f1 = s.polynomial("f1");
    const Prime p = s.prime("p");
    warn_prime(p, err);
    const OrbitLimits limits = s.limits(100);
    const PAdicOrbitVerdict verdict = s.has("f2") ? alternated_orbit_p(z0, f1, s.polynomial("f2"), p, limits)
                                                  : orbit_classify_p(f1, z0, p, limits);
    std::string csv = "index,numerator,denominator,valuation\n";
    for (std::size_t k = 0; k < verdict.points.size(); ++k) {
        const ExactRational& z = verdict.points[k];
        csv += std::to_string(k) + ',' + z.get_num().get_str() + ',' + z.get_den().get_str() + ',' +
               vp(z, p).to_string() + '\n';
    }
    auto file = open_output(path);
    file << csv;
    if (!file.flush()) {
        throw Error(ErrorKind::IoFailure, "failed writing '" + path + "'");
    }
    out << describe(verdict) << '\n';
}

inline std::vector<OptionSpec> view_options()
{
    return {{"width", "image width in pixels (default 800)"},
            {"height", "image height in pixels (default 800)"},
            {"zoom", "complex units per pixel (default 3/min(width,height))"},
            {"center-x", "real part of the image center"},
            {"center-y", "imaginary part of the image center"},
            {"max-iter", "iteration budget (default 256)"},
            {"threshold", "escape threshold on |z| (default 4)"},
            {"lanes", "worker threads (output is identical for any value)"},
            {"palette", "grayscale (default) or smooth"},
            {"out", "output PPM path"}};
}

} // namespace detail

[[nodiscard]] inline std::vector<CommandSpec> commands()
{
    auto render_opts = detail::view_options();
    render_opts.push_back({"c1", "first constant as \"re,im\""});
    render_opts.push_back({"c2", "second constant as \"re,im\""});
    render_opts.push_back({"swap-order", "apply c2 first", true});
    const std::vector<OptionSpec> budgets{{"max-iter", "iteration budget"},
                                          {"size-budget", "bit-length cap for exact iterates (default 1000000)"}};
    auto with = [](std::vector<OptionSpec> base, const std::vector<OptionSpec>& extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };
    return {
        {"render", "escape-time render of an alternated Julia set (PPM)", render_opts, detail::cmd_render},
        {"mandelbrot", "escape-time render of the Mandelbrot set (PPM)", detail::view_options(),
         detail::cmd_mandelbrot},
        {"classify-complex",
         "connectivity of a complex alternated Julia set",
         {{"c1", "first constant as \"re,im\""},
          {"c2", "second constant as \"re,im\""},
          {"max-iter", "quartic iterations per critical orbit (default 1000)"}},
         detail::cmd_classify_complex},
        {"classify-padic",
         "connectivity of a p-adic alternated Julia set",
         with({{"f1", "first map, coefficients leading term first (\"1,0,-1/4\")"},
               {"f2", "second map, coefficients leading term first"},
               {"p", "prime"}},
              budgets),
         detail::cmd_classify_padic},
        {"orbit-trace",
         "write an orbit as CSV",
         with({{"mode", "complex or padic"},
               {"z0", "starting point (\"re,im\" or exact rational)"},
               {"c1", "complex mode: first constant"},
               {"c2", "complex mode: second constant"},
               {"radius", "complex mode: escape radius (default from the constants)"},
               {"swap-order", "complex mode: apply c2 first", true},
               {"f1", "padic mode: map (first map when --f2 is given)"},
               {"f2", "padic mode: second map of an alternated orbit"},
               {"p", "padic mode: prime"},
               {"out", "output CSV path"}},
              budgets),
         detail::cmd_orbit_trace},
        {"mandelbrot-member",
         "membership of (c1,...,c_{d-1}) in the p-adic Mandelbrot set",
         with({{"v", "coefficient vector of exact rationals"}, {"p", "prime"}}, budgets),
         detail::cmd_mandelbrot_member},
        {"compose",
         "expand F2(F1(z)) and list its rational critical points",
         {{"f1", "inner map, coefficients leading term first"}, {"f2", "outer map, coefficients leading term first"}},
         detail::cmd_compose},
    };
}

/// Runs the command line `args` (args[0] is the program name). Flags override values
/// from --config. Returns the process exit code.
[[nodiscard]] inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Alternated Julia sets over the complex numbers and the p-adics", "ajulia"};
    app.require_subcommand(1);
    std::string config_path;
    std::string seed;
    bool print_config = false;
    app.add_option("--config", config_path, "flat key = value file; flags override it");
    auto* seed_opt = app.add_option("--seed", seed, "sampling seed for test harnesses; unused by the engine");
    app.add_flag("--print-config", print_config, "print the merged canonical config and exit");

    const auto specs = commands();
    struct Bound {
        CLI::App* app;
        std::map<std::string, std::pair<CLI::Option*, std::string>> values;
        std::map<std::string, std::pair<CLI::Option*, bool>> flags;
    };
    std::vector<Bound> bound(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        bound[i].app = app.add_subcommand(specs[i].name, specs[i].help);
        for (const auto& opt : specs[i].options) {
            if (opt.is_flag) {
                auto& slot = bound[i].flags[opt.key];
                slot.first = bound[i].app->add_flag("--" + opt.key, slot.second, opt.help);
            } else {
                auto& slot = bound[i].values[opt.key];
                slot.first = bound[i].app->add_option("--" + opt.key, slot.second, opt.help);
            }
        }
    }

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return UsageError;
    }

    try {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (!bound[i].app->parsed()) {
                continue;
            }
            RunConfig config;
            if (!config_path.empty()) {
                config = load_config(config_path);
                for (const auto& [key, value] : config.values) {
                    if (key != "seed" && !bound[i].values.count(key) && !bound[i].flags.count(key)) {
                        throw Error(ErrorKind::InvalidArgument,
                                    "config key '" + key + "' is not an option of " + specs[i].name);
                    }
                }
            }
            if (seed_opt->count() > 0) {
                config.values["seed"] = seed;
            }
            for (const auto& [key, slot] : bound[i].values) {
                if (slot.first->count() > 0) {
                    config.values[key] = slot.second;
                }
            }
            for (const auto& [key, slot] : bound[i].flags) {
                if (slot.first->count() > 0) {
                    config.values[key] = slot.second ? "true" : "false";
                }
            }
            if (print_config) {
                out << config.serialize();
                return Success;
            }
            specs[i].handler(Settings(config), out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const int code = exit_code_for(e.kind());
        if (code == UsageError) {
            err << "run 'ajulia --help' for usage\n";
        }
        return code;
    }
    return Success;
}

} // namespace ajulia::cli
