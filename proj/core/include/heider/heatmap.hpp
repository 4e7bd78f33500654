#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heider/sweep.hpp"

namespace heider {

/// Row-major 8-bit grayscale raster of a P_HB grid. Pixel value is
/// round(255 * p_hb), half away from zero, so 0 = black = never balanced
/// and 255 = white = always balanced.
struct HeatmapImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    bool operator==(const HeatmapImage&) const = default;
};

/// A rendered grid for one network size, with its axes. Columns run over
/// beta1 ascending left to right; rows over beta2 descending top to bottom
/// (so the origin cell sits bottom-left).
struct Heatmap {
    int n = 0;
    std::vector<double> beta1_values;
    std::vector<double> beta2_values;  // ascending; the top image row is the last value
    HeatmapImage image;
};

std::uint8_t phb_to_pixel(double p_hb);

/// Build the heatmap of size-n cells. The cells must contain exactly one
/// estimate for every (beta1, beta2) pair of the rectangular grid spanned
/// by the values present; a UsageError listing the missing pairs is thrown
/// otherwise.
Heatmap render_heatmap(const std::vector<CellEstimate>& cells, int n);

// Binary PGM (P5, maxval 255). The header carries the axis orientation as
// comment lines. read_pgm understands comments and returns the raw raster.
void write_pgm(const std::string& path, const Heatmap& map);
HeatmapImage read_pgm(const std::string& path);

/// Human-facing companion: the same raster as labelled SVG rects.
void write_svg(const std::string& path, const Heatmap& map);

/// Render size n from `cells` and write `<stem>.pgm` and `<stem>.svg`.
Heatmap write_heatmap_files(const std::vector<CellEstimate>& cells, int n,
                            const std::string& stem);

}  // namespace heider
