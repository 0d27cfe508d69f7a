#pragma once

#include "mimicry/indicator.hpp"

#include <json.hpp>

#include <iosfwd>

namespace mimicry {

// `date,u,std_err,status`
void write_useries_csv(const USeries& u_series, std::ostream& out);

// `date,u,std_err,status,r,in_danger_zone`, one row per U value. r is empty
// where the indicator is undefined. Throws DomainError if the two series do
// not share dates.
void write_indicator_csv(const USeries& u_series, const IndicatorSeries& indicator,
                         double threshold, std::ostream& out);

nlohmann::json to_json(const DangerInterval& interval);
nlohmann::json to_json(const DropProjection& projection);
nlohmann::json to_json(const AlertReport& report);

// Mean U over points dated strictly before `event` and on or after it.
struct EventComparison {
    Date event;
    std::size_t n_before = 0;
    std::size_t n_since = 0;
    double mean_before = 0.0;
    double mean_since = 0.0;
};

EventComparison compare_around(const USeries& u_series, const Date& event);

nlohmann::json to_json(const EventComparison& comparison);

}  // namespace mimicry
