#include "harmap/render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <vector>

#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"

namespace harmap {

namespace {

constexpr const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string num(double v) {
    if (v == 0.0)
        v = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// SVG y grows downwards; points are emitted as (x, -y).
std::string xy(cplx w) {
    return num(w.real()) + "," + num(-w.imag());
}

} // namespace

std::string render_svg(const HarmonicMap& f, std::span<const double> radii, std::size_t M) {
    if (M < 256)
        throw ArgumentError("render needs at least 256 samples per curve");
    if (radii.empty())
        throw ArgumentError("render needs at least one radius");
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0))
            throw DomainError("render radii must lie in (0, 1)");

    std::vector<std::vector<cplx>> curves;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (double r : radii) {
        curves.push_back(circle_image(f, r, M));
        for (const cplx& w : curves.back()) {
            x0 = std::min(x0, w.real());
            x1 = std::max(x1, w.real());
            y0 = std::min(y0, w.imag());
            y1 = std::max(y1, w.imag());
        }
    }
    x0 = std::min(x0, 0.0), x1 = std::max(x1, 0.0);
    y0 = std::min(y0, 0.0), y1 = std::max(y1, 0.0);
    const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
    x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
    const double span = std::max(x1 - x0, y1 - y0);
    const std::string stroke = num(0.003 * span);
    const std::string font = num(0.025 * span);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"" +
           num(600.0 * (y1 - y0) / (x1 - x0)) + "\" viewBox=\"" + num(x0) + " " + num(-y1) + " " +
           num(x1 - x0) + " " + num(y1 - y0) + "\">\n";
    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(-y1) + "\" width=\"" + num(x1 - x0) +
           "\" height=\"" + num(y1 - y0) + "\" fill=\"white\"/>\n";
    out += "<g stroke=\"#999999\" stroke-width=\"" + stroke + "\">\n";
    out += "<line x1=\"" + num(x0) + "\" y1=\"0\" x2=\"" + num(x1) + "\" y2=\"0\"/>\n";
    out += "<line x1=\"0\" y1=\"" + num(-y1) + "\" x2=\"0\" y2=\"" + num(-y0) + "\"/>\n";
    out += "</g>\n";

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& pts = curves[i];
        std::string d = "M" + xy(pts[0]);
        for (std::size_t k = 1; k < pts.size(); ++k)
            d += " L" + xy(pts[k]);
        d += " L" + xy(pts[0]) + " Z";
        out += "<path fill=\"none\" stroke=\"" + std::string(kPalette[i % 8]) + "\" stroke-width=\"" +
               stroke + "\" d=\"" + d + "\"/>\n";
        out += "<text x=\"" + num(pts[0].real()) + "\" y=\"" + num(-pts[0].imag()) +
               "\" font-size=\"" + font + "\" fill=\"" + kPalette[i % 8] + "\">r=" + num(radii[i]) +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void render_image(const HarmonicMap& f, std::span<const double> radii, std::size_t M,
                  const std::string& out_path) {
    const std::string svg = render_svg(f, radii, M);
    std::ofstream os(out_path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open '" + out_path + "' for writing");
    os << svg;
    if (!os.flush())
        throw IoError("failed writing '" + out_path + "'");
}

} // namespace harmap
