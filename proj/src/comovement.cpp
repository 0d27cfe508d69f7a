#include "mimicry/comovement.hpp"

#include "mimicry/error.hpp"
#include "mimicry/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace mimicry {

SignMatrix::SignMatrix(TradingCalendar calendar, std::vector<std::string> tickers,
                       std::vector<Sign> signs)
    : calendar_(std::move(calendar)), tickers_(std::move(tickers)), signs_(std::move(signs)) {
    if (signs_.size() != calendar_.size() * tickers_.size()) {
        throw DomainError("sign matrix size does not match calendar x tickers");
    }
}

std::size_t FractionSeries::valid_count() const {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [](const auto& p) { return p.valid(); }));
}

SignMatrix daily_signs(const PricePanel& panel) {
    if (panel.num_dates() < 2) {
        throw InsufficientDataError("need at least 2 trading dates to compute daily signs, have " +
                                    std::to_string(panel.num_dates()));
    }
    const std::size_t width = panel.num_tickers();
    const auto& dates = panel.calendar().dates();
    std::vector<Sign> signs;
    signs.reserve((dates.size() - 1) * width);
    for (std::size_t t = 1; t < dates.size(); ++t) {
        for (std::size_t j = 0; j < width; ++j) {
            const auto prev = panel.price(t - 1, j);
            const auto cur = panel.price(t, j);
            if (!prev || !cur) {
                signs.push_back(Sign::missing);
            } else if (*cur > *prev) {
                signs.push_back(Sign::up);
            } else if (*cur < *prev) {
                signs.push_back(Sign::down);
            } else {
                signs.push_back(Sign::unchanged);
            }
        }
    }
    return SignMatrix(TradingCalendar(std::vector<Date>(dates.begin() + 1, dates.end())),
                      panel.tickers(), std::move(signs));
}

namespace {

// Round onto the grid of multiples of 2^-53, on which 1 - x is exact for any
// x in [0, 1]. Moves x by at most 2^-54.
double onto_unit_grid(double x) {
    return std::nearbyint(x * 0x1p53) * 0x1p-53;
}

}  // namespace

std::optional<double> advancing_fraction(int up, int down, int min_participants) {
    const int n = up + down;
    if (n < min_participants || n == 0) {
        return std::nullopt;
    }
    // Clamp the minority side, then mirror it. Swapping up and down then
    // yields exactly 1 - f in both directions.
    const double eps = onto_unit_grid(1.0 / (2.0 * n));
    const double minority = std::max(onto_unit_grid(static_cast<double>(std::min(up, down)) / n), eps);
    return up <= down ? minority : 1.0 - minority;
}

FractionSeries fraction_series(const SignMatrix& signs, int min_participants) {
    if (min_participants < 2) {
        throw DomainError("min_participants must be at least 2");
    }
    FractionSeries series;
    series.points.reserve(signs.num_dates());
    for (std::size_t t = 0; t < signs.num_dates(); ++t) {
        int up = 0;
        int down = 0;
        for (std::size_t j = 0; j < signs.num_tickers(); ++j) {
            switch (signs.at(t, j)) {
                case Sign::up: ++up; break;
                case Sign::down: ++down; break;
                default: break;
            }
        }
        series.points.push_back(
            {signs.calendar()[t], advancing_fraction(up, down, min_participants), up + down});
    }
    return series;
}

void write_fractions_csv(const FractionSeries& series, std::ostream& out) {
    out << "date,fraction,participants,valid\n";
    for (const auto& p : series.points) {
        out << to_iso(p.date) << ',' << (p.fraction ? format_double(*p.fraction) : std::string{})
            << ',' << p.participants << ',' << (p.valid() ? 1 : 0) << '\n';
    }
}

}  // namespace mimicry
