#pragma once

#include "mimicry/indicator.hpp"

#include <optional>
#include <string>

namespace mimicry {

struct ChartOptions {
    Date event_date{std::chrono::year{2018}, std::chrono::February, std::chrono::day{5}};
    int width = 960;
    int height = 640;
    std::string title = "Market mimicry parameter U and its relative change";
};

// Two-panel SVG 1.1 document: U(t) on top; R(t) below with the threshold
// line and shaded danger zones. A vertical marker is drawn at the event date
// when it falls inside the plotted range.
//
// Returns nullopt and fills `diagnostic` (when given) for an empty series.
std::optional<std::string> emit_svg(const USeries& u_series, const IndicatorSeries& indicator,
                                    const AlertReport& report, const ChartOptions& options = {},
                                    std::string* diagnostic = nullptr);

}  // namespace mimicry
