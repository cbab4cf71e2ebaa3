#include "cyclophi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "cyclophi/errors.hpp"

namespace cyclophi::svg {

namespace {

// Pixel coordinates use a fixed two-decimal rendering and tick labels a fixed
// "%.6g" rendering so the emitted bytes are reproducible.
std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Largest of 1, 2, 5 times a power of ten giving roughly six intervals.
double nice_step(double range) {
    const double raw = range / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0) return mag;
    if (norm <= 2.0) return 2.0 * mag;
    if (norm <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

constexpr int kMarginL = 70, kMarginR = 20, kMarginT = 40, kMarginB = 50;

}  // namespace

std::string render_scatter(const std::vector<census::Point>& pts, const PlotOptions& opts) {
    const int W = opts.width, H = opts.height;
    const double x0 = kMarginL, x1 = W - kMarginR;
    const double y0 = H - kMarginB, y1 = kMarginT;  // y grows downward in SVG

    double c_max = 1.0, n_max = 1.0;
    for (const census::Point& p : pts) {
        c_max = std::max(c_max, std::fabs(static_cast<double>(p.c)));
        n_max = std::max(n_max, static_cast<double>(p.n));
    }

    const auto map_x = [&](double c) { return x0 + (c + c_max) / (2.0 * c_max) * (x1 - x0); };
    const auto map_y = [&](double n) { return y0 + n / n_max * (y1 - y0); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(W) +
           "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " + std::to_string(W) + " " +
           std::to_string(H) + "\">\n";
    out += "<rect width=\"" + std::to_string(W) + "\" height=\"" + std::to_string(H) +
           "\" fill=\"white\"/>\n";

    // Vertical guide at c = 0.
    out += "<line x1=\"" + px(map_x(0)) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(map_x(0)) +
           "\" y2=\"" + px(y0) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    out += "<rect x=\"" + px(x0) + "\" y=\"" + px(y1) + "\" width=\"" + px(x1 - x0) +
           "\" height=\"" + px(y0 - y1) + "\"/>\n";

    const double x_step = nice_step(2.0 * c_max);
    const long kx_lo = static_cast<long>(std::ceil(-c_max / x_step - 1e-9));
    const long kx_hi = static_cast<long>(std::floor(c_max / x_step + 1e-9));
    for (long k = kx_lo; k <= kx_hi; ++k) {
        const double x = map_x(k * x_step);
        out += "<line x1=\"" + px(x) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x) + "\" y2=\"" +
               px(y0 + 5) + "\"/>\n";
    }
    const double y_step = nice_step(n_max);
    const long ky_hi = static_cast<long>(std::floor(n_max / y_step + 1e-9));
    for (long k = 0; k <= ky_hi; ++k) {
        const double y = map_y(k * y_step);
        out += "<line x1=\"" + px(x0 - 5) + "\" y1=\"" + px(y) + "\" x2=\"" + px(x0) +
               "\" y2=\"" + px(y) + "\"/>\n";
    }
    out += "</g>\n";

    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (long k = kx_lo; k <= kx_hi; ++k) {
        const double x = map_x(k * x_step);
        out += "<text x=\"" + px(x) + "\" y=\"" + px(y0 + 18) +
               "\" text-anchor=\"middle\">" + label(k * x_step) + "</text>\n";
    }
    for (long k = 0; k <= ky_hi; ++k) {
        const double y = map_y(k * y_step);
        out += "<text x=\"" + px(x0 - 8) + "\" y=\"" + px(y) +
               "\" text-anchor=\"end\" dy=\"0.32em\">" + label(k * y_step) + "</text>\n";
    }
    out += "<text x=\"" + px((x0 + x1) / 2.0) + "\" y=\"" + px(H - 12) +
           "\" text-anchor=\"middle\">c</text>\n";
    out += "<text x=\"18\" y=\"" + px((y0 + y1) / 2.0) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + px((y0 + y1) / 2.0) +
           ")\">n</text>\n";
    if (!opts.title.empty()) {
        out += "<text x=\"" + px(W / 2.0) + "\" y=\"22\" text-anchor=\"middle\" "
               "font-size=\"14\">" + opts.title + "</text>\n";
    }
    out += "</g>\n";

    out += "<g fill=\"#1f3d7a\" fill-opacity=\"0.65\" stroke=\"none\">\n";
    for (const census::Point& p : pts) {
        out += "<circle cx=\"" + px(map_x(static_cast<double>(p.c))) + "\" cy=\"" +
               px(map_y(static_cast<double>(p.n))) + "\" r=\"2\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

void write_scatter(const std::filesystem::path& path, const std::vector<census::Point>& pts,
                   const PlotOptions& opts) {
    const std::string bytes = render_scatter(pts, opts);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace cyclophi::svg
