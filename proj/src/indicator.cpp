#include "mimicry/indicator.hpp"

#include "mimicry/error.hpp"

#include <cmath>
#include <span>

namespace mimicry {

const char* to_string(IndicatorMode mode) {
    return mode == IndicatorMode::zscore ? "zscore" : "fractional";
}

std::optional<IndicatorMode> parse_indicator_mode(std::string_view text) {
    if (text == "zscore") {
        return IndicatorMode::zscore;
    }
    if (text == "fractional") {
        return IndicatorMode::fractional;
    }
    return std::nullopt;
}

void AnalysisConfig::validate() const {
    if (window_len < 10) {
        throw DomainError("window length must be at least 10, got " + std::to_string(window_len));
    }
    if (baseline_len <= window_len) {
        throw DomainError("baseline length must exceed the window length");
    }
    if (!(crash_low > 0.0 && crash_low < crash_high && crash_high < 1.0)) {
        throw DomainError("crash range must satisfy 0 < low < high < 1");
    }
    if (!std::isfinite(threshold)) {
        throw DomainError("threshold must be finite");
    }
}

USeries rolling_u(const FractionSeries& fractions, const AnalysisConfig& cfg,
                  const FitConfig& fit_cfg) {
    cfg.validate();
    fit_cfg.validate();
    std::vector<Date> dates;
    std::vector<double> values;
    for (const auto& p : fractions.points) {
        if (p.fraction) {
            dates.push_back(p.date);
            values.push_back(*p.fraction);
        }
    }
    const auto window = static_cast<std::size_t>(cfg.window_len);
    if (values.size() < window) {
        throw InsufficientDataError("need " + std::to_string(window) +
                                    " valid days for one window, have " +
                                    std::to_string(values.size()));
    }
    USeries series;
    series.points.reserve(values.size() - window + 1);
    const std::span<const double> all(values);
    for (std::size_t end = window; end <= values.size(); ++end) {
        const auto fit = fit_u(all.subspan(end - window, window), fit_cfg);
        series.points.push_back({dates[end - 1], fit.u_hat, fit.std_err, fit.status, fit.n});
    }
    return series;
}

IndicatorSeries relative_change(const USeries& u_series, const AnalysisConfig& cfg) {
    cfg.validate();
    const auto lag = static_cast<std::size_t>(cfg.window_len);
    const auto baseline = static_cast<std::size_t>(cfg.baseline_len);
    const auto& pts = u_series.points;

    IndicatorSeries out;
    out.mode = cfg.mode;
    out.points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        IndicatorPoint point{pts[i].date, std::nullopt};
        if (i >= lag) {
            const double change = pts[i].u - pts[i - lag].u;
            if (cfg.mode == IndicatorMode::fractional) {
                point.r = change / pts[i - lag].u;
            } else if (i + 1 >= baseline) {
                const std::size_t first = i + 1 - baseline;
                double mean = 0.0;
                for (std::size_t k = first; k <= i; ++k) {
                    mean += pts[k].u;
                }
                mean /= static_cast<double>(baseline);
                double ss = 0.0;
                for (std::size_t k = first; k <= i; ++k) {
                    const double d = pts[k].u - mean;
                    ss += d * d;
                }
                const double sd = std::sqrt(ss / static_cast<double>(baseline - 1));
                // A flat baseline that spans the lag has no change to report.
                point.r = sd > 0.0 ? change / sd : 0.0;
            }
        }
        out.points.push_back(point);
    }
    return out;
}

bool in_danger_zone(const IndicatorPoint& point, double threshold) {
    return point.r && *point.r <= threshold;
}

AlertReport detect_crossings(const IndicatorSeries& indicator, const AnalysisConfig& cfg) {
    AlertReport report;
    report.threshold = cfg.threshold;
    bool inside = false;
    for (const auto& p : indicator.points) {
        const bool danger = in_danger_zone(p, cfg.threshold);
        if (danger && !inside) {
            report.crossings.push_back(p.date);
            report.intervals.push_back({p.date, p.date, false});
        } else if (danger) {
            report.intervals.back().exit = p.date;
        }
        inside = danger;
    }
    if (inside) {
        report.intervals.back().open = true;
    }
    return report;
}

DropProjection project_drop(double index_level, const AnalysisConfig& cfg) {
    cfg.validate();
    if (!(index_level > 0.0) || !std::isfinite(index_level)) {
        throw DomainError("index level must be positive");
    }
    return {index_level, cfg.crash_low * index_level, cfg.crash_high * index_level};
}

double points_to_pct(double points_drop, double index_level) {
    if (!(points_drop > 0.0) || !(index_level > 0.0)) {
        throw DomainError("point drop and index level must both be positive");
    }
    return 100.0 * points_drop / index_level;
}

}  // namespace mimicry
