#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace mimicry {

using Date = std::chrono::year_month_day;

// Strict ISO-8601 calendar date, `YYYY-MM-DD`. Returns nullopt for anything
// else, including out-of-range days such as 2018-02-30.
std::optional<Date> parse_iso_date(std::string_view text);

std::string to_iso(const Date& date);

// Inclusive date interval. The default interval admits every date.
struct DateRange {
    Date from{std::chrono::year{1}, std::chrono::January, std::chrono::day{1}};
    Date to{std::chrono::year{9999}, std::chrono::December, std::chrono::day{31}};

    bool empty() const { return to < from; }
    bool contains(const Date& d) const { return !(d < from) && !(to < d); }
};

}  // namespace mimicry
