#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace conekit::cli {

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 80, kRight = 30, kTop = 50, kBottom = 70;

std::string num(double v, const char* fmt = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Tick spacing from {1, 2, 5} x 10^k giving about `target` ticks.
double tick_step(double span, int target = 6) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0})
        if (m * mag >= raw) return m * mag;
    return 10 * mag;
}

struct Axis {
    double lo, hi, step;
};

Axis axis_for(double lo, double hi) {
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
        const double pad = std::max(std::abs(lo) * 0.05, 0.05);
        lo -= pad;
        hi += pad;
    }
    const double step = tick_step(hi - lo);
    return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

std::string tick_label(double v, double step) {
    const int decimals = std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9)));
    char fmt[16];
    std::snprintf(fmt, sizeof fmt, "%%.%df", decimals);
    if (std::abs(v) < step * 1e-9) v = 0.0;
    return num(v, fmt);
}

}  // namespace

std::string render_svg(const std::vector<PlotPoint>& points, const std::string& caption,
                       const std::string& x_label, const std::string& y_label) {
    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    if (!points.empty()) {
        xlo = xhi = points.front().x;
        ylo = yhi = points.front().y;
        for (const auto& p : points) {
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, p.y);
            yhi = std::max(yhi, p.y);
        }
    }
    const Axis ax = axis_for(xlo, xhi), ay = axis_for(ylo, yhi);
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - ax.lo) / (ax.hi - ax.lo) * pw; };
    auto sy = [&](double y) { return kTop + ph - (y - ay.lo) / (ay.hi - ay.lo) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    s += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
         escape(caption) + "</text>\n";
    s += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

    s += "<g font-family=\"sans-serif\" font-size=\"12\" stroke=\"black\">\n";
    const int nx = static_cast<int>(std::lround((ax.hi - ax.lo) / ax.step));
    for (int k = 0; k <= nx; ++k) {
        const double v = ax.lo + k * ax.step, x = sx(v);
        s += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop + ph) + "\" x2=\"" + num(x) + "\" y2=\"" +
             num(kTop + ph + 6) + "\"/>\n";
        s += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + ph + 22) + "\" text-anchor=\"middle\" stroke=\"none\">" +
             tick_label(v, ax.step) + "</text>\n";
    }
    const int ny = static_cast<int>(std::lround((ay.hi - ay.lo) / ay.step));
    for (int k = 0; k <= ny; ++k) {
        const double v = ay.lo + k * ay.step, y = sy(v);
        s += "<line x1=\"" + num(kLeft - 6) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(y) +
             "\"/>\n";
        s += "<text x=\"" + num(kLeft - 10) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\" stroke=\"none\">" +
             tick_label(v, ay.step) + "</text>\n";
    }
    s += "</g>\n";
    s += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 20) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(x_label) + "</text>\n";
    s += "<text x=\"20\" y=\"" + num(kTop + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" " +
         "font-size=\"14\" transform=\"rotate(-90 20 " + num(kTop + ph / 2) + ")\">" + escape(y_label) + "</text>\n";

    if (points.size() == 1) {
        s += "<circle cx=\"" + num(sx(points[0].x)) + "\" cy=\"" + num(sy(points[0].y)) +
             "\" r=\"3\" fill=\"steelblue\"/>\n";
    } else if (!points.empty()) {
        s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k) s += ' ';
            s += num(sx(points[k].x)) + "," + num(sy(points[k].y));
        }
        s += "\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace conekit::cli
