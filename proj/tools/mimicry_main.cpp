// mimicry: rolling market co-movement (U) analysis with danger-zone alerts.
//
// Exit codes: 0 no danger zone, 2 danger zone present, 1 any error.

#include "mimicry/run.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

mimicry::Date require_date(const std::string& text, const char* flag) {
    const auto d = mimicry::parse_iso_date(text);
    if (!d) {
        throw CLI::ValidationError(flag, "expected a YYYY-MM-DD date, got '" + text + "'");
    }
    return *d;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace mimicry;

    CLI::App app{"Fit the market co-movement parameter U over rolling windows of daily\n"
                 "advancing fractions and flag danger zones where its normalised change\n"
                 "falls to the threshold.\n\n"
                 "Exit status: 0 = no danger zone, 2 = danger zone present, 1 = error.",
                 "mimicry"};

    RunConfig cfg;
    std::string input;
    std::string universe;
    std::string from;
    std::string to;
    std::string mode = "zscore";
    std::string formats = "csv,json,svg";
    std::string synth_spec;
    std::string synth_start;
    std::string event_date = "2018-02-05";
    std::uint64_t seed = kDefaultSeed;
    int synth_tickers = 500;
    std::string out = ".";

    app.add_option("--input", input, "End-of-day price CSV with a header row");
    app.add_option("--universe", universe,
                   "Ticker list, one per line, '#' comments (default: every ticker in the input)");
    app.add_option("--from", from, "First date to include (YYYY-MM-DD)");
    app.add_option("--to", to, "Last date to include (YYYY-MM-DD)");
    app.add_option("--date-col", cfg.columns.date, "Date column name")->capture_default_str();
    app.add_option("--ticker-col", cfg.columns.ticker, "Ticker column name")->capture_default_str();
    app.add_option("--price-col", cfg.columns.adj_close, "Adjusted close column name")
        ->capture_default_str();
    app.add_option("--window", cfg.analysis.window_len, "Fit window in valid trading days")
        ->capture_default_str();
    app.add_option("--baseline", cfg.analysis.baseline_len,
                   "Trailing U values used for the z-score dispersion")
        ->capture_default_str();
    app.add_option("--threshold", cfg.analysis.threshold, "Danger-zone threshold on R")
        ->capture_default_str();
    app.add_option("--mode", mode, "Indicator normalisation: zscore | fractional")
        ->capture_default_str();
    app.add_option("--crash-low", cfg.analysis.crash_low, "Lower crash fraction for projections")
        ->capture_default_str();
    app.add_option("--crash-high", cfg.analysis.crash_high, "Upper crash fraction for projections")
        ->capture_default_str();
    app.add_option("--index-level", cfg.index_levels,
                   "Index level to project a crash-sized drop for (repeatable)");
    app.add_option("--min-participants", cfg.min_participants,
                   "Minimum up+down movers for a valid day")
        ->capture_default_str();
    app.add_option("--min-coverage", cfg.min_coverage,
                   "Report tickers quoted on fewer than this fraction of dates")
        ->capture_default_str();
    app.add_option("--out", out, "Output directory")->capture_default_str();
    app.add_option("--formats", formats, "Comma-separated subset of csv,json,svg")
        ->capture_default_str();
    app.add_option("--synth-spec", synth_spec,
                   "Generate a synthetic panel instead of reading --input, e.g. 4:400,1:120 "
                   "(U:days segments)");
    app.add_option("--synth-tickers", synth_tickers, "Tickers in the synthetic panel")
        ->capture_default_str();
    app.add_option("--synth-start", synth_start, "First date of the synthetic panel (YYYY-MM-DD)");
    app.add_option("--seed", seed, "Seed for the synthetic generator")->capture_default_str();
    app.add_option("--event-date", event_date, "Date of the vertical marker in figure.svg")
        ->capture_default_str();

    try {
        app.parse(argc, argv);

        if (!input.empty()) {
            cfg.input = input;
        }
        if (!universe.empty()) {
            cfg.universe = universe;
        }
        if (!from.empty()) {
            cfg.range.from = require_date(from, "--from");
        }
        if (!to.empty()) {
            cfg.range.to = require_date(to, "--to");
        }
        const auto parsed_mode = parse_indicator_mode(mode);
        if (!parsed_mode) {
            throw CLI::ValidationError("--mode", "expected zscore or fractional, got '" + mode + "'");
        }
        cfg.analysis.mode = *parsed_mode;
        const auto parsed_formats = parse_formats(formats);
        if (!parsed_formats) {
            throw CLI::ValidationError("--formats", "expected a subset of csv,json,svg");
        }
        cfg.formats = *parsed_formats;
        cfg.event_date = require_date(event_date, "--event-date");
        cfg.out_dir = out;
        if (!synth_spec.empty()) {
            SynthSpec spec;
            spec.segments = parse_segments(synth_spec);
            spec.seed = seed;
            spec.n_tickers = synth_tickers;
            if (!synth_start.empty()) {
                spec.start_date = require_date(synth_start, "--synth-start");
            }
            cfg.synth = spec;
        }
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error [config]: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error [config]: " << e.what() << '\n';
        return kExitError;
    }

    return run_analyze(cfg, std::cerr);
}
