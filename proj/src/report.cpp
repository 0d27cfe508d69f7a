#include "mimicry/report.hpp"

#include "mimicry/error.hpp"
#include "mimicry/numfmt.hpp"

#include <ostream>

namespace mimicry {

void write_useries_csv(const USeries& u_series, std::ostream& out) {
    out << "date,u,std_err,status\n";
    for (const auto& p : u_series.points) {
        out << to_iso(p.date) << ',' << format_double(p.u) << ',' << format_double(p.std_err) << ','
            << to_string(p.status) << '\n';
    }
}

void write_indicator_csv(const USeries& u_series, const IndicatorSeries& indicator,
                         double threshold, std::ostream& out) {
    if (u_series.points.size() != indicator.points.size()) {
        throw DomainError("indicator and U series differ in length");
    }
    out << "date,u,std_err,status,r,in_danger_zone\n";
    for (std::size_t i = 0; i < u_series.points.size(); ++i) {
        const auto& u = u_series.points[i];
        const auto& r = indicator.points[i];
        if (u.date != r.date) {
            throw DomainError("indicator and U series dates differ at " + to_iso(u.date));
        }
        out << to_iso(u.date) << ',' << format_double(u.u) << ',' << format_double(u.std_err) << ','
            << to_string(u.status) << ',' << (r.r ? format_double(*r.r) : std::string{}) << ','
            << (in_danger_zone(r, threshold) ? 1 : 0) << '\n';
    }
}

nlohmann::json to_json(const DangerInterval& interval) {
    return {{"entry", to_iso(interval.entry)}, {"exit", to_iso(interval.exit)}, {"open", interval.open}};
}

nlohmann::json to_json(const DropProjection& projection) {
    return {{"index_level", projection.index_level},
            {"low_points", projection.low_points},
            {"high_points", projection.high_points}};
}

nlohmann::json to_json(const AlertReport& report) {
    auto crossings = nlohmann::json::array();
    for (const auto& d : report.crossings) {
        crossings.push_back(to_iso(d));
    }
    auto intervals = nlohmann::json::array();
    for (const auto& i : report.intervals) {
        intervals.push_back(to_json(i));
    }
    auto projections = nlohmann::json::array();
    for (const auto& p : report.projections) {
        projections.push_back(to_json(p));
    }
    return {{"threshold", report.threshold},
            {"crossings", std::move(crossings)},
            {"intervals", std::move(intervals)},
            {"projections", std::move(projections)}};
}

EventComparison compare_around(const USeries& u_series, const Date& event) {
    EventComparison cmp{event};
    double before = 0.0;
    double since = 0.0;
    for (const auto& p : u_series.points) {
        if (p.date < event) {
            before += p.u;
            ++cmp.n_before;
        } else {
            since += p.u;
            ++cmp.n_since;
        }
    }
    cmp.mean_before = cmp.n_before ? before / static_cast<double>(cmp.n_before) : 0.0;
    cmp.mean_since = cmp.n_since ? since / static_cast<double>(cmp.n_since) : 0.0;
    return cmp;
}

nlohmann::json to_json(const EventComparison& c) {
    nlohmann::json j{{"event_date", to_iso(c.event)}, {"n_before", c.n_before}, {"n_since", c.n_since}};
    j["mean_u_before"] = c.n_before ? nlohmann::json(c.mean_before) : nlohmann::json(nullptr);
    j["mean_u_since"] = c.n_since ? nlohmann::json(c.mean_since) : nlohmann::json(nullptr);
    return j;
}

}  // namespace mimicry
