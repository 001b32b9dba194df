#include "cobbdouglas/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace cobbdouglas::svg {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
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

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!std::isfinite(lo)) { lo = 0.0; hi = 1.0; }
        if (hi - lo < 1e-12) { lo -= 0.5; hi += 0.5; }
        const double m = 0.05 * (hi - lo);
        lo -= m;
        hi += m;
    }
};

} // namespace

std::string render(const Chart& chart) {
    constexpr double left = 64, right = 130, top = 36, bottom = 48;
    const double plot_w = chart.width - left - right;
    const double plot_h = chart.height - top - bottom;

    Range xr, yr;
    for (const auto& s : chart.series) {
        for (double v : s.x) xr.add(v);
        for (double v : s.y) yr.add(v);
    }
    xr.pad();
    yr.pad();
    const auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto py = [&](double y) { return top + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart.width << "\" height=\"" << chart.height
       << "\" viewBox=\"0 0 " << chart.width << ' ' << chart.height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(chart.width / 2.0) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(chart.title) << "</text>\n";
    os << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w) << "\" height=\""
       << num(plot_h) << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // ticks
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
        char lx[32], ly[32];
        std::snprintf(lx, sizeof lx, "%.4g", fx);
        std::snprintf(ly, sizeof ly, "%.4g", fy);
        os << "<line x1=\"" << num(px(fx)) << "\" y1=\"" << num(top + plot_h) << "\" x2=\"" << num(px(fx))
           << "\" y2=\"" << num(top + plot_h + 4) << "\" stroke=\"#444\"/>\n";
        os << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(top + plot_h + 16) << "\" text-anchor=\"middle\">" << lx
           << "</text>\n";
        os << "<line x1=\"" << num(left - 4) << "\" y1=\"" << num(py(fy)) << "\" x2=\"" << num(left) << "\" y2=\""
           << num(py(fy)) << "\" stroke=\"#444\"/>\n";
        os << "<text x=\"" << num(left - 6) << "\" y=\"" << num(py(fy) + 4) << "\" text-anchor=\"end\">" << ly
           << "</text>\n";
    }
    os << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(chart.height - 10.0)
       << "\" text-anchor=\"middle\">" << escape(chart.x_label) << "</text>\n";
    os << "<text x=\"14\" y=\"" << num(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
       << num(top + plot_h / 2) << ")\">" << escape(chart.y_label) << "</text>\n";

    double legend_y = top + 8;
    for (const auto& s : chart.series) {
        const std::size_t n = std::min(s.x.size(), s.y.size());
        if (s.line && n > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < n; ++i) os << (i ? " " : "") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
            os << "\"/>\n";
        }
        if (s.markers) {
            for (std::size_t i = 0; i < n; ++i) {
                os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"2.5\" fill=\""
                   << s.color << "\"/>\n";
            }
        }
        os << "<rect x=\"" << num(left + plot_w + 10) << "\" y=\"" << num(legend_y - 8) << "\" width=\"10\" height=\"10\" fill=\""
           << s.color << "\"/>\n";
        os << "<text x=\"" << num(left + plot_w + 24) << "\" y=\"" << num(legend_y) << "\">" << escape(s.label)
           << "</text>\n";
        legend_y += 16;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace cobbdouglas::svg
