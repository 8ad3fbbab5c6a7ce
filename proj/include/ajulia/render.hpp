#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "ajulia/complex_dynamics.hpp"
#include "ajulia/error.hpp"

namespace ajulia {

struct ViewPort {
    std::size_t width = 0;
    std::size_t height = 0;
    /// Complex units per pixel.
    double zoom = 0.0;
    double center_x = 0.0;
    double center_y = 0.0;

    /// The |re| < 1.5, |im| < 1.5 window around the origin.
    static ViewPort default_window(std::size_t width, std::size_t height)
    {
        const auto shorter = static_cast<double>(std::min(width, height));
        return {width, height, shorter > 0 ? 3.0 / shorter : 0.0, 0.0, 0.0};
    }

    /// Seed for pixel (x, y); row 0 is the top row of the image.
    [[nodiscard]] ComplexValue pixel(std::size_t x, std::size_t y) const noexcept
    {
        const double w = static_cast<double>(width);
        const double h = static_cast<double>(height);
        return {(static_cast<double>(x) - w / 2.0) * zoom + center_x,
                (static_cast<double>(y) - h / 2.0) * zoom + center_y};
    }
};

struct RenderOptions {
    std::uint32_t max_iter = 256;
    double threshold = 4.0;
    /// Apply c2 first, the parity used by the original pseudocode.
    bool swap_order = false;
    /// Worker threads; output does not depend on this.
    std::size_t lanes = 1;
    std::size_t pixel_cap = 100'000'000;
};

/// Escape counts, row-major. A count equal to max_iter means the seed did not escape.
struct EscapeImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint32_t max_iter = 0;
    std::vector<std::uint32_t> counts;

    [[nodiscard]] std::uint32_t at(std::size_t x, std::size_t y) const { return counts[y * width + x]; }

    friend bool operator==(const EscapeImage&, const EscapeImage&) = default;

    [[nodiscard]] double escaped_fraction() const
    {
        if (counts.empty()) {
            return 0.0;
        }
        const auto escaped = std::count_if(counts.begin(), counts.end(),
                                           [this](std::uint32_t c) { return c < max_iter; });
        return static_cast<double>(escaped) / static_cast<double>(counts.size());
    }
};

namespace detail {

inline void validate(const ViewPort& view, const RenderOptions& options)
{
    if (view.width == 0 || view.height == 0) {
        throw Error(ErrorKind::InvalidArgument, "width and height must be positive");
    }
    if (!(view.zoom > 0.0) || !std::isfinite(view.zoom) || !std::isfinite(view.center_x) ||
        !std::isfinite(view.center_y)) {
        throw Error(ErrorKind::InvalidArgument, "zoom must be positive and the center finite");
    }
    if (view.width > options.pixel_cap / view.height) {
        throw Error(ErrorKind::ViewTooLarge, "view of " + std::to_string(view.width) + "x" +
                                                 std::to_string(view.height) + " exceeds the pixel cap of " +
                                                 std::to_string(options.pixel_cap));
    }
    if (options.max_iter < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");
    }
    if (!(options.threshold > 0.0) || !std::isfinite(options.threshold)) {
        throw Error(ErrorKind::InvalidArgument, "threshold must be positive");
    }
}

/// Fills every row through `pixel_count(x, y)`, striping rows across lanes.
template <typename PixelFn>
EscapeImage render_rows(const ViewPort& view, const RenderOptions& options, PixelFn pixel_count)
{
    EscapeImage image{view.width, view.height, options.max_iter,
                      std::vector<std::uint32_t>(view.width * view.height)};
    const std::size_t lanes = std::clamp<std::size_t>(options.lanes, 1, view.height);
    auto work = [&](std::size_t lane) {
        for (std::size_t y = lane; y < view.height; y += lanes) {
            for (std::size_t x = 0; x < view.width; ++x) {
                image.counts[y * view.width + x] = pixel_count(view.pixel(x, y));
            }
        }
    };
    if (lanes == 1) {
        work(0);
        return image;
    }
    std::vector<std::jthread> workers;
    workers.reserve(lanes);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
        workers.emplace_back(work, lane);
    }
    workers.clear();
    return image;
}

} // namespace detail

/// Escape-time render of the alternated Julia set. Each count is the number of completed
/// steps when |z| first reaches the threshold, capped at max_iter.
[[nodiscard]] inline EscapeImage render_alternated(const ViewPort& view, const AlternatedParams& params,
                                                   const RenderOptions& options)
{
    detail::validate(view, options);
    detail::require_params(params);
    const double limit = options.threshold * options.threshold;
    const ComplexValue even_step = options.swap_order ? params.c2 : params.c1;
    const ComplexValue odd_step = options.swap_order ? params.c1 : params.c2;
    const std::uint32_t max_iter = options.max_iter;
    return detail::render_rows(view, options, [&](ComplexValue z) {
        std::uint32_t iter = 0;
        while (iter < max_iter && z.norm2() < limit) {
            z = square_add(z, iter % 2 == 0 ? even_step : odd_step);
            ++iter;
        }
        return iter;
    });
}

/// Escape-time render of the parameter plane of z^2 + c, iterating from 0.
[[nodiscard]] inline EscapeImage render_mandelbrot(const ViewPort& view, const RenderOptions& options)
{
    detail::validate(view, options);
    const double limit = options.threshold * options.threshold;
    const std::uint32_t max_iter = options.max_iter;
    return detail::render_rows(view, options, [&](ComplexValue c) {
        ComplexValue z{0.0, 0.0};
        std::uint32_t iter = 0;
        while (iter < max_iter && z.norm2() < limit) {
            z = square_add(z, c);
            ++iter;
        }
        return iter;
    });
}

enum class Palette { Grayscale, Smooth };

/// RGB triple for one count.
[[nodiscard]] inline std::array<std::uint8_t, 3> pixel_color(std::uint32_t count, std::uint32_t max_iter,
                                                             Palette palette)
{
    if (count >= max_iter) {
        return {0, 0, 0};
    }
    if (palette == Palette::Grayscale) {
        const auto g = static_cast<std::uint8_t>(std::uint64_t{255} * count / max_iter);
        return {g, g, g};
    }
    const double t = static_cast<double>(count) / static_cast<double>(max_iter);
    const double s = 1.0 - t;
    auto channel = [](double v) { return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0)); };
    return {channel(9.0 * s * t * t * t * 255.0), channel(15.0 * s * s * t * t * 255.0),
            channel(8.5 * s * s * s * t * 255.0)};
}

/// Binary PPM (P6) bytes: header "P6\n<w> <h>\n255\n" then RGB triples, top row first.
[[nodiscard]] inline std::string encode_ppm(const EscapeImage& image, Palette palette = Palette::Grayscale)
{
    std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    out.reserve(out.size() + image.counts.size() * 3);
    for (const std::uint32_t count : image.counts) {
        for (const std::uint8_t byte : pixel_color(count, image.max_iter, palette)) {
            out.push_back(static_cast<char>(byte));
        }
    }
    return out;
}

inline void write_ppm(const EscapeImage& image, const std::string& path, Palette palette = Palette::Grayscale)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::IoFailure, "cannot open '" + path + "' for writing");
    }
    const std::string bytes = encode_ppm(image, palette);
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    file.close();
    if (!file) {
        throw Error(ErrorKind::IoFailure, "failed writing '" + path + "'");
    }
}

} // namespace ajulia
