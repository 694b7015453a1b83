#include "shellrev/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shellrev/table.hpp"

namespace shellrev {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    // two decimals are enough for pixel coordinates and keep files small
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
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

std::vector<double> nice_ticks(double lo, double hi, int target) {
    std::vector<double> ticks;
    if (!(hi > lo)) return {lo};
    double raw = (hi - lo) / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double norm = raw / mag;
    double step = (norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0) * mag;
    double first = std::ceil(lo / step) * step;
    for (double v = first; v <= hi + 0.5 * step; v += step) ticks.push_back(v);
    return ticks;
}

}  // namespace

std::string render_line_chart(const SvgChart& chart) {
    const double ml = 80, mr = 160, mt = 50, mb = 60;
    const double pw = chart.width - ml - mr, ph = chart.height - mt - mb;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : chart.series)
        for (const auto& [x, y] : s.points) {
            if (!y) continue;
            if (first) {
                xmin = xmax = x;
                ymin = ymax = *y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, *y);
                ymax = std::max(ymax, *y);
            }
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart.width << "\" height=\""
       << chart.height << "\" viewBox=\"0 0 " << chart.width << " " << chart.height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << fmt(ml + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
          "font-family=\"sans-serif\">"
       << xml_escape(chart.title) << "</text>\n";

    for (double t : nice_ticks(xmin, xmax, 6)) {
        double x = px(t);
        os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(mt) << "\" x2=\"" << fmt(x) << "\" y2=\""
           << fmt(mt + ph) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(mt + ph + 18)
           << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << format_double(t)
           << "</text>\n";
    }
    for (double t : nice_ticks(ymin, ymax, 6)) {
        double y = py(t);
        os << "<line x1=\"" << fmt(ml) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(ml + pw) << "\" y2=\""
           << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << fmt(ml - 6) << "\" y=\"" << fmt(y + 4)
           << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << format_double(t)
           << "</text>\n";
    }
    os << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\"" << fmt(pw) << "\" height=\""
       << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(ml + pw / 2) << "\" y=\"" << fmt(chart.height - 14)
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << xml_escape(chart.x_label)
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << fmt(mt + ph / 2)
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\"rotate(-90 18 "
       << fmt(mt + ph / 2) << ")\">" << xml_escape(chart.y_label) << "</text>\n";

    for (size_t si = 0; si < chart.series.size(); ++si) {
        const auto& s = chart.series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::ostringstream seg;
        bool open = false;
        auto flush = [&]() {
            if (open) {
                os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
                   << seg.str() << "\"/>\n";
                seg.str("");
                open = false;
            }
        };
        for (const auto& [x, y] : s.points) {
            if (!y) {
                flush();
                continue;
            }
            if (open) seg << " ";
            seg << fmt(px(x)) << "," << fmt(py(*y));
            open = true;
        }
        flush();
        double ly = mt + 16.0 * static_cast<double>(si);
        os << "<line x1=\"" << fmt(ml + pw + 10) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(ml + pw + 34)
           << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << fmt(ml + pw + 40) << "\" y=\"" << fmt(ly + 4)
           << "\" font-size=\"11\" font-family=\"sans-serif\">" << xml_escape(s.name) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace shellrev
