#include "mimicry/ingest.hpp"

#include "mimicry/error.hpp"
#include "mimicry/numfmt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace mimicry {

namespace {

std::string trim(std::string_view value) {
    const auto first = value.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = value.find_last_not_of(" \t\r\n");
    return std::string(value.substr(first, last - first + 1));
}

std::string lower(std::string value) {
    std::transform(value.begin(), value.end(), value.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return value;
}

// RFC 4180 style: fields may be double-quoted, `""` escapes a quote.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(trim(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(trim(field));
    return fields;
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    const auto wanted = lower(trim(name));
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (lower(header[i]) == wanted) {
            return i;
        }
    }
    throw FormatError("header has no column named '" + name + "'");
}

}  // namespace

ParseResult parse_eod_csv(std::istream& input, const ColumnMap& columns) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(input, line)) {
        ++line_no;
        if (!is_blank(line)) {
            have_header = true;
            break;
        }
    }
    if (!have_header) {
        throw FormatError("missing header row");
    }
    // UTF-8 byte order mark
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) {
        line.erase(0, 3);
    }
    const auto header = split_csv_line(line);
    const std::size_t date_col = find_column(header, columns.date);
    const std::size_t ticker_col = find_column(header, columns.ticker);
    const std::size_t price_col = find_column(header, columns.adj_close);
    const std::size_t needed = std::max({date_col, ticker_col, price_col}) + 1;

    ParseResult result;
    auto reject = [&](std::string message) {
        result.diagnostics.push_back({line_no, std::move(message)});
    };

    while (std::getline(input, line)) {
        ++line_no;
        if (is_blank(line)) {
            continue;
        }
        ++result.data_rows;
        const auto fields = split_csv_line(line);
        if (fields.size() < needed) {
            reject("expected at least " + std::to_string(needed) + " fields, got " +
                   std::to_string(fields.size()));
            continue;
        }
        const auto& ticker = fields[ticker_col];
        if (ticker.empty()) {
            reject("empty ticker");
            continue;
        }
        const auto date = parse_iso_date(fields[date_col]);
        if (!date) {
            reject("unparseable date '" + fields[date_col] + "'");
            continue;
        }
        double price = 0.0;
        if (!parse_double(fields[price_col], price) || !std::isfinite(price)) {
            reject("unparseable price '" + fields[price_col] + "'");
            continue;
        }
        if (!(price > 0.0)) {
            reject("non-positive price " + fields[price_col]);
            continue;
        }
        result.records.push_back({ticker, *date, price});
    }

    if (result.records.empty()) {
        throw EmptyInputError("no valid price rows (" + std::to_string(result.diagnostics.size()) +
                              " rejected)");
    }
    return result;
}

std::vector<std::string> parse_universe(std::istream& input) {
    std::vector<std::string> symbols;
    std::string line;
    while (std::getline(input, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto symbol = trim(line);
        if (symbol.empty()) {
            continue;
        }
        if (std::find(symbols.begin(), symbols.end(), symbol) == symbols.end()) {
            symbols.push_back(std::move(symbol));
        }
    }
    if (symbols.empty()) {
        throw EmptyInputError("universe lists no tickers");
    }
    return symbols;
}

TradingCalendar::TradingCalendar(std::vector<Date> dates) : dates_(std::move(dates)) {
    for (std::size_t i = 1; i < dates_.size(); ++i) {
        if (!(dates_[i - 1] < dates_[i])) {
            throw DomainError("trading calendar must be strictly increasing at " +
                              to_iso(dates_[i]));
        }
    }
}

PricePanel::PricePanel(TradingCalendar calendar, std::vector<std::string> tickers,
                       std::vector<std::optional<double>> prices)
    : calendar_(std::move(calendar)), tickers_(std::move(tickers)), prices_(std::move(prices)) {
    if (prices_.size() != calendar_.size() * tickers_.size()) {
        throw DomainError("price matrix size does not match calendar x tickers");
    }
    for (const auto& p : prices_) {
        if (p && !(*p > 0.0)) {
            throw DomainError("panel prices must be positive");
        }
    }
}

PanelBuild build_panel(const std::vector<PriceRecord>& records,
                       const std::vector<std::string>& universe, const DateRange& range) {
    if (universe.empty()) {
        throw DomainError("empty ticker universe");
    }
    if (range.empty()) {
        throw DomainError("empty date range " + to_iso(range.from) + ".." + to_iso(range.to));
    }

    std::unordered_map<std::string, std::size_t> column;
    std::vector<std::string> tickers;
    for (const auto& t : universe) {
        if (column.emplace(t, tickers.size()).second) {
            tickers.push_back(t);
        }
    }

    std::vector<Date> dates;
    for (const auto& r : records) {
        if (range.contains(r.date) && column.count(r.ticker) != 0) {
            dates.push_back(r.date);
        }
    }
    std::sort(dates.begin(), dates.end());
    dates.erase(std::unique(dates.begin(), dates.end()), dates.end());
    if (dates.empty()) {
        throw NoDataError("no records for the universe within " + to_iso(range.from) + ".." +
                          to_iso(range.to));
    }

    const std::size_t width = tickers.size();
    std::vector<std::optional<double>> prices(dates.size() * width);
    std::vector<Diagnostic> diagnostics;
    for (const auto& r : records) {
        if (!range.contains(r.date)) {
            continue;
        }
        const auto col = column.find(r.ticker);
        if (col == column.end()) {
            continue;
        }
        const auto row = static_cast<std::size_t>(
            std::lower_bound(dates.begin(), dates.end(), r.date) - dates.begin());
        auto& cell = prices[row * width + col->second];
        if (cell) {
            diagnostics.push_back({0, "duplicate " + r.ticker + " on " + to_iso(r.date) + ": " +
                                          format_double(*cell) + " replaced by " +
                                          format_double(r.adj_close)});
        }
        cell = r.adj_close;
    }

    return {PricePanel(TradingCalendar(std::move(dates)), std::move(tickers), std::move(prices)),
            std::move(diagnostics)};
}

CoverageReport validate_panel(const PricePanel& panel, double min_coverage) {
    if (!(min_coverage >= 0.0 && min_coverage <= 1.0)) {
        throw DomainError("min_coverage must lie in [0, 1]");
    }
    CoverageReport report;
    report.min_coverage = min_coverage;
    const std::size_t rows = panel.num_dates();
    for (std::size_t j = 0; j < panel.num_tickers(); ++j) {
        TickerCoverage tc{panel.tickers()[j], 0, 0.0};
        for (std::size_t i = 0; i < rows; ++i) {
            if (panel.price(i, j)) {
                ++tc.present;
            }
        }
        tc.coverage = rows == 0 ? 0.0 : static_cast<double>(tc.present) / static_cast<double>(rows);
        if (rows == 0 || tc.coverage < min_coverage) {
            report.flagged.push_back(tc.ticker);
        }
        report.tickers.push_back(std::move(tc));
    }
    return report;
}

void write_panel_csv(const PricePanel& panel, std::ostream& out) {
    out << "date,ticker,adj_close\n";
    for (std::size_t i = 0; i < panel.num_dates(); ++i) {
        const auto date = to_iso(panel.calendar()[i]);
        for (std::size_t j = 0; j < panel.num_tickers(); ++j) {
            if (const auto p = panel.price(i, j)) {
                out << date << ',' << panel.tickers()[j] << ',' << format_double(*p) << '\n';
            }
        }
    }
}

}  // namespace mimicry
