#include "heider/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "heider/errors.hpp"
#include "heider/results_csv.hpp"

namespace heider {

std::uint8_t phb_to_pixel(double p_hb) {
    if (!(p_hb >= 0.0 && p_hb <= 1.0)) throw UsageError("phb_to_pixel: p_hb must lie in [0, 1]");
    // std::lround rounds half away from zero.
    return static_cast<std::uint8_t>(std::lround(255.0 * p_hb));
}

Heatmap render_heatmap(const std::vector<CellEstimate>& cells, int n) {
    Heatmap map;
    map.n = n;

    std::map<std::pair<double, double>, double> by_cell;
    for (const CellEstimate& c : cells) {
        if (c.n != n) continue;
        if (!by_cell.emplace(std::make_pair(c.beta1, c.beta2), c.p_hb).second)
            throw UsageError("render_heatmap: duplicate cell (beta1 = " + format_g6(c.beta1) +
                             ", beta2 = " + format_g6(c.beta2) + ") for n = " + std::to_string(n));
        if (std::find(map.beta1_values.begin(), map.beta1_values.end(), c.beta1) ==
            map.beta1_values.end())
            map.beta1_values.push_back(c.beta1);
        if (std::find(map.beta2_values.begin(), map.beta2_values.end(), c.beta2) ==
            map.beta2_values.end())
            map.beta2_values.push_back(c.beta2);
    }
    if (by_cell.empty())
        throw UsageError("render_heatmap: no cells for n = " + std::to_string(n));
    std::sort(map.beta1_values.begin(), map.beta1_values.end());
    std::sort(map.beta2_values.begin(), map.beta2_values.end());

    std::string missing;
    for (double b1 : map.beta1_values)
        for (double b2 : map.beta2_values)
            if (!by_cell.count({b1, b2})) {
                if (!missing.empty()) missing += ", ";
                missing += "(" + format_g6(b1) + ", " + format_g6(b2) + ")";
            }
    if (!missing.empty())
        throw UsageError("render_heatmap: incomplete grid for n = " + std::to_string(n) +
                         "; missing cells: " + missing);

    const int width = static_cast<int>(map.beta1_values.size());
    const int height = static_cast<int>(map.beta2_values.size());
    map.image.width = width;
    map.image.height = height;
    map.image.pixels.resize(static_cast<std::size_t>(width) * height);
    for (int row = 0; row < height; ++row) {
        // Top row carries the largest beta2.
        const double b2 = map.beta2_values[static_cast<std::size_t>(height - 1 - row)];
        for (int col = 0; col < width; ++col) {
            const double b1 = map.beta1_values[static_cast<std::size_t>(col)];
            map.image.pixels[static_cast<std::size_t>(row) * width + col] =
                phb_to_pixel(by_cell.at({b1, b2}));
        }
    }
    return map;
}

namespace {

std::string joined_g6(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) out += ' ';
        out += format_g6(v);
    }
    return out;
}

}  // namespace

void write_pgm(const std::string& path, const Heatmap& map) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_pgm: cannot open " + path);
    out << "P5\n";
    out << "# P_HB heatmap, n = " << map.n << "; pixel = round(255 * p_hb)\n";
    out << "# beta1 left to right ascending: " << joined_g6(map.beta1_values) << '\n';
    out << "# beta2 top to bottom descending: ";
    std::vector<double> reversed(map.beta2_values.rbegin(), map.beta2_values.rend());
    out << joined_g6(reversed) << '\n';
    out << map.image.width << ' ' << map.image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(map.image.pixels.data()),
              static_cast<std::streamsize>(map.image.pixels.size()));
    out.flush();
    if (!out) throw IoError("write_pgm: write failed for " + path);
}

HeatmapImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_pgm: cannot open " + path);

    auto next_token = [&]() -> std::string {
        std::string token;
        for (;;) {
            if (!(in >> token)) throw IoError("read_pgm: truncated header in " + path);
            if (token[0] == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            return token;
        }
    };

    if (next_token() != "P5") throw IoError("read_pgm: not a binary PGM: " + path);
    HeatmapImage image;
    try {
        image.width = std::stoi(next_token());
        image.height = std::stoi(next_token());
        if (std::stoi(next_token()) != 255)
            throw IoError("read_pgm: expected maxval 255 in " + path);
    } catch (const std::logic_error&) {
        throw IoError("read_pgm: malformed header in " + path);
    }
    if (image.width < 1 || image.height < 1)
        throw IoError("read_pgm: bad dimensions in " + path);
    in.get();  // single whitespace byte after maxval
    image.pixels.resize(static_cast<std::size_t>(image.width) * image.height);
    in.read(reinterpret_cast<char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(image.pixels.size()))
        throw IoError("read_pgm: truncated raster in " + path);
    return image;
}

void write_svg(const std::string& path, const Heatmap& map) {
    constexpr int kCell = 32;
    constexpr int kMarginLeft = 64;
    constexpr int kMarginBottom = 48;
    constexpr int kMarginTop = 40;
    constexpr int kMarginRight = 16;

    const int w = map.image.width;
    const int h = map.image.height;
    const int svg_w = kMarginLeft + w * kCell + kMarginRight;
    const int svg_h = kMarginTop + h * kCell + kMarginBottom;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_w << "\" height=\""
        << svg_h << "\" viewBox=\"0 0 " << svg_w << ' ' << svg_h << "\">\n";
    svg << "  <title>P_HB, n = " << map.n << "</title>\n";
    svg << "  <text x=\"" << kMarginLeft + w * kCell / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">P_HB, n = " << map.n << "</text>\n";
    for (int row = 0; row < h; ++row)
        for (int col = 0; col < w; ++col) {
            const int v = map.image.pixels[static_cast<std::size_t>(row) * w + col];
            svg << "  <rect x=\"" << kMarginLeft + col * kCell << "\" y=\""
                << kMarginTop + row * kCell << "\" width=\"" << kCell << "\" height=\"" << kCell
                << "\" fill=\"rgb(" << v << ',' << v << ',' << v << ")\"/>\n";
        }
    // Axis ticks: beta1 below the raster, beta2 on the left.
    for (int col = 0; col < w; ++col)
        svg << "  <text x=\"" << kMarginLeft + col * kCell + kCell / 2 << "\" y=\""
            << kMarginTop + h * kCell + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << format_g6(map.beta1_values[static_cast<std::size_t>(col)]) << "</text>\n";
    for (int row = 0; row < h; ++row)
        svg << "  <text x=\"" << kMarginLeft - 6 << "\" y=\""
            << kMarginTop + row * kCell + kCell / 2 + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
            << format_g6(map.beta2_values[static_cast<std::size_t>(h - 1 - row)]) << "</text>\n";
    svg << "  <text x=\"" << kMarginLeft + w * kCell / 2 << "\" y=\"" << svg_h - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">beta1</text>\n";
    svg << "  <text x=\"16\" y=\"" << kMarginTop + h * kCell / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << kMarginTop + h * kCell / 2 << ")\">beta2</text>\n";
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_svg: cannot open " + path);
    out << svg.str();
    out.flush();
    if (!out) throw IoError("write_svg: write failed for " + path);
}

Heatmap write_heatmap_files(const std::vector<CellEstimate>& cells, int n,
                            const std::string& stem) {
    Heatmap map = render_heatmap(cells, n);
    write_pgm(stem + ".pgm", map);
    write_svg(stem + ".svg", map);
    return map;
}

}  // namespace heider
