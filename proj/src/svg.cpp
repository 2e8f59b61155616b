#include "sops/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace sops {

namespace {
constexpr double kSqrt3_2 = 0.8660254037844386;
constexpr double kScale = 14.0;
constexpr double kRadius = 5.0;
}  // namespace

void write_svg(std::ostream& out, const Configuration& c) {
    if (c.size() == 0) throw std::invalid_argument("write_svg: empty configuration");
    double xlo = 1e18, xhi = -1e18, ylo = 1e18, yhi = -1e18;
    auto embed = [](Cell cell) {
        return std::pair<double, double>{cell.q + cell.r / 2.0, cell.r * kSqrt3_2};
    };
    for (const Cell& cell : c.cells()) {
        auto [x, y] = embed(cell);
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    double pad = 1.0;
    double w = (xhi - xlo + 2 * pad) * kScale;
    double h = (yhi - ylo + 2 * pad) * kScale;
    auto px = [&](double x) { return (x - xlo + pad) * kScale; };
    auto py = [&](double y) { return h - (y - ylo + pad) * kScale; };  // flip y upward
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    for (const Cell& cell : c.cells_sorted()) {
        auto [x1, y1] = embed(cell);
        for (int d = 0; d < 3; ++d) {  // each occupied edge once
            Cell nb = neighbor(cell, {d});
            if (!c.occupied(nb)) continue;
            auto [x2, y2] = embed(nb);
            out << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2)
                << "\" y2=\"" << py(y2) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    for (const Cell& cell : c.cells_sorted()) {
        auto [x, y] = embed(cell);
        out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << kRadius
            << "\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
}

void write_svg_file(const std::string& path, const Configuration& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open SVG file for writing: " + path);
    write_svg(out, c);
}

}  // namespace sops
