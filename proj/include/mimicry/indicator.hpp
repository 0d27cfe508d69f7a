#pragma once

#include "mimicry/betafit.hpp"
#include "mimicry/comovement.hpp"
#include "mimicry/date.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mimicry {

// How the change in U over one window length is normalised.
//   zscore:     (U(t) - U(t-L)) / sample stddev of the trailing baseline of U
//   fractional: (U(t) - U(t-L)) / U(t-L)
enum class IndicatorMode { zscore, fractional };

const char* to_string(IndicatorMode mode);
std::optional<IndicatorMode> parse_indicator_mode(std::string_view text);

struct AnalysisConfig {
    int window_len = 81;
    int baseline_len = 252;
    double threshold = -2.0;
    IndicatorMode mode = IndicatorMode::zscore;
    double crash_low = 0.05;
    double crash_high = 0.08;

    // Throws DomainError unless window_len >= 10, baseline_len > window_len
    // and 0 < crash_low < crash_high.
    void validate() const;
};

struct UPoint {
    Date date;
    double u = 0.0;
    double std_err = 0.0;
    FitStatus status = FitStatus::converged;
    std::size_t n = 0;
};

// One entry per valid trading day that closes a full window. Windows are
// counted in valid observations, so invalid days never carry a U value.
struct USeries {
    std::vector<UPoint> points;
    std::size_t size() const { return points.size(); }
};

struct IndicatorPoint {
    Date date;
    std::optional<double> r;
};

struct IndicatorSeries {
    std::vector<IndicatorPoint> points;
    IndicatorMode mode = IndicatorMode::zscore;
};

struct DangerInterval {
    Date entry;
    Date exit;          // last date still at or below the threshold
    bool open = false;  // still in the zone at the end of the series

    bool operator==(const DangerInterval&) const = default;
};

struct DropProjection {
    double index_level = 0.0;
    double low_points = 0.0;
    double high_points = 0.0;
};

struct AlertReport {
    std::vector<Date> crossings;
    std::vector<DangerInterval> intervals;
    double threshold = -2.0;
    std::vector<DropProjection> projections;
};

// Throws InsufficientDataError when fewer than window_len valid days exist.
USeries rolling_u(const FractionSeries& fractions, const AnalysisConfig& cfg,
                  const FitConfig& fit_cfg = {});

// R is absent wherever the lag or the baseline reaches before the series.
IndicatorSeries relative_change(const USeries& u_series, const AnalysisConfig& cfg);

// A crossing is the first day of a run with R <= threshold; the run ends on
// the last such day. An absent R ends a run.
AlertReport detect_crossings(const IndicatorSeries& indicator, const AnalysisConfig& cfg);

bool in_danger_zone(const IndicatorPoint& point, double threshold);

// Crash-sized single-day drop in index points for the configured percentage
// range. Throws DomainError for a non-positive level.
DropProjection project_drop(double index_level, const AnalysisConfig& cfg);

// Percentage of the index level lost by a point drop. Throws DomainError
// unless both arguments are positive.
double points_to_pct(double points_drop, double index_level);

}  // namespace mimicry
