#pragma once

#include "mimicry/date.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimicry {

struct PriceRecord {
    std::string ticker;
    Date date;
    double adj_close = 0.0;

    bool operator==(const PriceRecord&) const = default;
};

// Something in the input that was skipped or overridden. `line` is the
// 1-based physical line in the source file, 0 when not tied to a line.
struct Diagnostic {
    std::size_t line = 0;
    std::string message;
};

struct ColumnMap {
    std::string date = "date";
    std::string ticker = "ticker";
    std::string adj_close = "adj_close";
};

struct ParseResult {
    std::vector<PriceRecord> records;
    std::vector<Diagnostic> diagnostics;
    std::size_t data_rows = 0;
};

// Reads a header-first CSV of end-of-day prices. Rows that cannot produce a
// valid record land in `diagnostics`; every non-blank data row ends up in
// exactly one of the two lists.
//
// Throws FormatError when the header is missing or lacks a mapped column and
// EmptyInputError when no row is valid.
ParseResult parse_eod_csv(std::istream& input, const ColumnMap& columns = {});

// One symbol per line, `#` starts a comment, blank lines ignored. Duplicates
// keep their first position. Throws EmptyInputError if nothing remains.
std::vector<std::string> parse_universe(std::istream& input);

class TradingCalendar {
public:
    TradingCalendar() = default;
    // Throws DomainError unless `dates` is strictly increasing.
    explicit TradingCalendar(std::vector<Date> dates);

    const std::vector<Date>& dates() const { return dates_; }
    std::size_t size() const { return dates_.size(); }
    bool empty() const { return dates_.empty(); }
    const Date& operator[](std::size_t i) const { return dates_[i]; }

    bool operator==(const TradingCalendar&) const = default;

private:
    std::vector<Date> dates_;
};

// Date x ticker matrix of optional adjusted closes. Immutable once built.
class PricePanel {
public:
    // `prices` is row-major, one row per calendar date. Throws DomainError on
    // a dimension mismatch or a non-positive present price.
    PricePanel(TradingCalendar calendar, std::vector<std::string> tickers,
               std::vector<std::optional<double>> prices);

    const TradingCalendar& calendar() const { return calendar_; }
    const std::vector<std::string>& tickers() const { return tickers_; }
    std::size_t num_dates() const { return calendar_.size(); }
    std::size_t num_tickers() const { return tickers_.size(); }

    std::optional<double> price(std::size_t date_idx, std::size_t ticker_idx) const {
        return prices_[date_idx * tickers_.size() + ticker_idx];
    }

    bool operator==(const PricePanel&) const = default;

private:
    TradingCalendar calendar_;
    std::vector<std::string> tickers_;
    std::vector<std::optional<double>> prices_;
};

struct PanelBuild {
    PricePanel panel;
    std::vector<Diagnostic> diagnostics;
};

// Aligns records onto the dates (within `range`) where at least one universe
// ticker quotes. Records for tickers outside the universe are ignored.
// Duplicate (date, ticker) pairs keep the last record and emit a diagnostic.
//
// Throws DomainError for an empty universe or range and NoDataError when the
// calendar comes out empty.
PanelBuild build_panel(const std::vector<PriceRecord>& records,
                       const std::vector<std::string>& universe, const DateRange& range = {});

struct TickerCoverage {
    std::string ticker;
    std::size_t present = 0;
    double coverage = 0.0;
};

struct CoverageReport {
    std::vector<TickerCoverage> tickers;
    std::vector<std::string> flagged;  // coverage < min_coverage, universe order
    double min_coverage = 0.0;
};

// Pure report on how complete each ticker's history is. A panel with no
// dates reports coverage 0 for every ticker.
CoverageReport validate_panel(const PricePanel& panel, double min_coverage);

// Canonical long-format CSV (`date,ticker,adj_close`), date-major in ticker
// order, absent cells omitted, prices in shortest round-trip form.
void write_panel_csv(const PricePanel& panel, std::ostream& out);

}  // namespace mimicry
