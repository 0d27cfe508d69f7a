#pragma once

#include "mimicry/date.hpp"
#include "mimicry/ingest.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimicry {

enum class Sign : std::uint8_t { up, down, unchanged, missing };

// Day-over-day direction of every ticker. Row t compares panel dates t and
// t+1, so the calendar starts at the panel's second date.
class SignMatrix {
public:
    SignMatrix(TradingCalendar calendar, std::vector<std::string> tickers, std::vector<Sign> signs);

    const TradingCalendar& calendar() const { return calendar_; }
    const std::vector<std::string>& tickers() const { return tickers_; }
    std::size_t num_dates() const { return calendar_.size(); }
    std::size_t num_tickers() const { return tickers_.size(); }
    Sign at(std::size_t date_idx, std::size_t ticker_idx) const {
        return signs_[date_idx * tickers_.size() + ticker_idx];
    }

private:
    TradingCalendar calendar_;
    std::vector<std::string> tickers_;
    std::vector<Sign> signs_;
};

inline constexpr int kDefaultMinParticipants = 100;

struct FractionPoint {
    Date date;
    std::optional<double> fraction;  // present iff the day is valid
    int participants = 0;            // up + down movers

    bool valid() const { return fraction.has_value(); }
    bool operator==(const FractionPoint&) const = default;
};

struct FractionSeries {
    std::vector<FractionPoint> points;

    std::size_t size() const { return points.size(); }
    std::size_t valid_count() const;
};

// Throws InsufficientDataError when the panel has fewer than two dates.
SignMatrix daily_signs(const PricePanel& panel);

// Advancing fraction over movers only, clamped to [1/(2n), 1 - 1/(2n)].
// Throws DomainError if min_participants < 2.
FractionSeries fraction_series(const SignMatrix& signs,
                               int min_participants = kDefaultMinParticipants);

// Same computation from raw counts. Values sit on the 2^-53 grid so that
// swapping up and down gives exactly 1 - f.
std::optional<double> advancing_fraction(int up, int down, int min_participants);

// `date,fraction,participants,valid`; fraction left empty on invalid days.
void write_fractions_csv(const FractionSeries& series, std::ostream& out);

}  // namespace mimicry
