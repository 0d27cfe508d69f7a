#include "mimicry/chart.hpp"

#include "mimicry/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mimicry {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 48.0;
constexpr double kGap = 44.0;
constexpr double kBottom = 40.0;

std::string num(double v) {
    return format_fixed(v, 2);
}

std::string escape_xml(const std::string& text) {
    std::string out;
    for (char c : text) {
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

long day_number(const Date& d) {
    return std::chrono::sys_days{d}.time_since_epoch().count();
}

struct Axis {
    double lo;
    double hi;
    double pix_lo;  // pixel for lo (bottom of the panel)
    double pix_hi;  // pixel for hi (top)

    double map(double v) const { return pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo); }
};

Axis make_axis(double lo, double hi, double pix_bottom, double pix_top) {
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad, pix_bottom, pix_top};
}

}  // namespace

std::optional<std::string> emit_svg(const USeries& u_series, const IndicatorSeries& indicator,
                                    const AlertReport& report, const ChartOptions& options,
                                    std::string* diagnostic) {
    if (u_series.points.empty()) {
        if (diagnostic) {
            *diagnostic = "U series is empty; no figure written";
        }
        return std::nullopt;
    }
    const double width = options.width;
    const double height = options.height;
    const double panel_h = (height - kTop - kGap - kBottom) / 2.0;
    const double upper_top = kTop;
    const double upper_bottom = upper_top + panel_h;
    const double lower_top = upper_bottom + kGap;
    const double lower_bottom = lower_top + panel_h;
    const double plot_w = width - kLeft - kRight;

    const long first_day = day_number(u_series.points.front().date);
    const long last_day = day_number(u_series.points.back().date);
    const double span = static_cast<double>(std::max(1L, last_day - first_day));
    auto x_of = [&](const Date& d) {
        return kLeft + static_cast<double>(day_number(d) - first_day) / span * plot_w;
    };

    double u_lo = u_series.points.front().u;
    double u_hi = u_lo;
    for (const auto& p : u_series.points) {
        u_lo = std::min(u_lo, p.u);
        u_hi = std::max(u_hi, p.u);
    }
    const Axis u_axis = make_axis(u_lo, u_hi, upper_bottom, upper_top);

    double r_lo = report.threshold;
    double r_hi = std::max(0.0, report.threshold);
    for (const auto& p : indicator.points) {
        if (p.r) {
            r_lo = std::min(r_lo, *p.r);
            r_hi = std::max(r_hi, *p.r);
        }
    }
    const Axis r_axis = make_axis(r_lo, r_hi, lower_bottom, lower_top);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\""
        << options.height << "\" fill=\"white\"/>\n";
    svg << "<text class=\"title\" x=\"" << num(width / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-size=\"15\">" << escape_xml(options.title) << "</text>\n";

    for (const auto& [top, bottom] : {std::pair{upper_top, upper_bottom}, std::pair{lower_top, lower_bottom}}) {
        svg << "<rect class=\"frame\" x=\"" << num(kLeft) << "\" y=\"" << num(top) << "\" width=\""
            << num(plot_w) << "\" height=\"" << num(bottom - top)
            << "\" fill=\"none\" stroke=\"#444\"/>\n";
    }

    for (const auto& zone : report.intervals) {
        const double x0 = x_of(zone.entry);
        const double x1 = std::max(x_of(zone.exit), x0 + 1.0);
        svg << "<rect class=\"danger-zone\" x=\"" << num(x0) << "\" y=\"" << num(lower_top)
            << "\" width=\"" << num(x1 - x0) << "\" height=\"" << num(panel_h)
            << "\" fill=\"#d62728\" fill-opacity=\"0.18\"/>\n";
    }

    svg << "<polyline class=\"u-series\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < u_series.points.size(); ++i) {
        const auto& p = u_series.points[i];
        svg << (i ? " " : "") << num(x_of(p.date)) << ',' << num(u_axis.map(p.u));
    }
    svg << "\"/>\n";

    svg << "<polyline class=\"r-series\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& p : indicator.points) {
        if (p.r) {
            svg << (first ? "" : " ") << num(x_of(p.date)) << ',' << num(r_axis.map(*p.r));
            first = false;
        }
    }
    svg << "\"/>\n";

    const double y_threshold = r_axis.map(report.threshold);
    svg << "<line class=\"threshold\" x1=\"" << num(kLeft) << "\" y1=\"" << num(y_threshold)
        << "\" x2=\"" << num(kLeft + plot_w) << "\" y2=\"" << num(y_threshold)
        << "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\"/>\n";

    const long event_day = day_number(options.event_date);
    if (event_day >= first_day && event_day <= last_day) {
        const double xe = x_of(options.event_date);
        svg << "<line class=\"event-marker\" x1=\"" << num(xe) << "\" y1=\"" << num(upper_top)
            << "\" x2=\"" << num(xe) << "\" y2=\"" << num(lower_bottom)
            << "\" stroke=\"#7f7f7f\" stroke-width=\"1\"/>\n";
    }

    auto label = [&](double x, double y, const char* anchor, const std::string& text) {
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor
            << "\">" << escape_xml(text) << "</text>\n";
    };
    label(kLeft - 8, upper_top + 12, "end", format_fixed(u_axis.hi, 3));
    label(kLeft - 8, upper_bottom, "end", format_fixed(u_axis.lo, 3));
    label(kLeft - 8, lower_top + 12, "end", format_fixed(r_axis.hi, 2));
    label(kLeft - 8, lower_bottom, "end", format_fixed(r_axis.lo, 2));
    label(kLeft - 8, y_threshold + 4, "end", format_fixed(report.threshold, 2));
    label(24, (upper_top + upper_bottom) / 2, "middle", "U");
    label(24, (lower_top + lower_bottom) / 2, "middle", "R");
    label(kLeft, lower_bottom + 18, "start", to_iso(u_series.points.front().date));
    label(kLeft + plot_w, lower_bottom + 18, "end", to_iso(u_series.points.back().date));
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mimicry
