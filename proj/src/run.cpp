#include "mimicry/run.hpp"

#include "mimicry/error.hpp"
#include "mimicry/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace mimicry {

namespace {

class StageError : public Error {
public:
    StageError(std::string stage, const std::string& what)
        : Error(what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

template <typename F>
auto in_stage(const char* stage, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(stage, e.what());
    }
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return in;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
    out.close();
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
}

template <typename Writer>
std::string render(Writer&& writer) {
    std::ostringstream os;
    writer(os);
    return os.str();
}

std::vector<std::string> tickers_in(const std::vector<PriceRecord>& records) {
    std::vector<std::string> tickers;
    for (const auto& r : records) {
        tickers.push_back(r.ticker);
    }
    std::sort(tickers.begin(), tickers.end());
    tickers.erase(std::unique(tickers.begin(), tickers.end()), tickers.end());
    return tickers;
}

int run(const RunConfig& cfg, std::ostream& log) {
    in_stage("config", [&] {
        if (cfg.input.has_value() == cfg.synth.has_value()) {
            throw DomainError("exactly one of an input file or a synthetic spec is required");
        }
        cfg.analysis.validate();
        cfg.fit.validate();
        if (cfg.min_participants < 2) {
            throw DomainError("min participants must be at least 2");
        }
    });

    in_stage("output", [&] {
        std::error_code ec;
        std::filesystem::create_directories(cfg.out_dir, ec);
        if (ec || !std::filesystem::is_directory(cfg.out_dir)) {
            throw IoError("cannot create output directory " + cfg.out_dir.string());
        }
    });

    std::filesystem::path input_path;
    std::vector<std::string> universe;
    if (cfg.synth) {
        in_stage("synth", [&] {
            const auto synth = generate_panel(*cfg.synth, cfg.min_participants);
            input_path = cfg.out_dir / "panel.csv";
            write_file(input_path, render([&](std::ostream& os) { write_panel_csv(synth.panel, os); }));
            universe = synth.panel.tickers();
        });
    } else {
        input_path = *cfg.input;
        if (cfg.universe) {
            universe = in_stage("universe", [&] {
                auto in = open_input(*cfg.universe);
                return parse_universe(in);
            });
        }
    }

    const auto parsed = in_stage("ingest", [&] {
        auto in = open_input(input_path);
        return parse_eod_csv(in, cfg.columns);
    });
    if (universe.empty()) {
        universe = tickers_in(parsed.records);
    }
    const auto built = in_stage("panel", [&] { return build_panel(parsed.records, universe, cfg.range); });
    const auto coverage = in_stage("panel", [&] { return validate_panel(built.panel, cfg.min_coverage); });

    log << "ingest: " << parsed.records.size() << " records, " << parsed.diagnostics.size()
        << " rejected rows, " << built.diagnostics.size() << " duplicates; panel "
        << built.panel.num_dates() << " dates x " << built.panel.num_tickers() << " tickers, "
        << coverage.flagged.size() << " below coverage " << cfg.min_coverage << '\n';

    const auto fractions = in_stage("comovement", [&] {
        return fraction_series(daily_signs(built.panel), cfg.min_participants);
    });
    const auto u_series = in_stage("fit", [&] { return rolling_u(fractions, cfg.analysis, cfg.fit); });
    const auto indicator = in_stage("indicator", [&] { return relative_change(u_series, cfg.analysis); });
    auto alerts = in_stage("indicator", [&] {
        auto report = detect_crossings(indicator, cfg.analysis);
        for (double level : cfg.index_levels) {
            report.projections.push_back(project_drop(level, cfg.analysis));
        }
        return report;
    });

    in_stage("report", [&] {
        if (cfg.formats.count(OutputFormat::csv)) {
            write_file(cfg.out_dir / "fractions.csv",
                       render([&](std::ostream& os) { write_fractions_csv(fractions, os); }));
            write_file(cfg.out_dir / "useries.csv",
                       render([&](std::ostream& os) { write_useries_csv(u_series, os); }));
            write_file(cfg.out_dir / "indicator.csv", render([&](std::ostream& os) {
                           write_indicator_csv(u_series, indicator, cfg.analysis.threshold, os);
                       }));
        }
        if (cfg.formats.count(OutputFormat::json)) {
            nlohmann::json doc;
            doc["config"] = {{"window_len", cfg.analysis.window_len},
                             {"baseline_len", cfg.analysis.baseline_len},
                             {"threshold", cfg.analysis.threshold},
                             {"mode", to_string(cfg.analysis.mode)},
                             {"min_participants", cfg.min_participants},
                             {"crash_low", cfg.analysis.crash_low},
                             {"crash_high", cfg.analysis.crash_high}};
            auto flagged = nlohmann::json::array();
            for (const auto& t : coverage.flagged) {
                flagged.push_back(t);
            }
            doc["data"] = {{"source", cfg.synth ? "synthetic" : "input"},
                           {"records", parsed.records.size()},
                           {"rejected_rows", parsed.diagnostics.size()},
                           {"duplicates", built.diagnostics.size()},
                           {"dates", built.panel.num_dates()},
                           {"tickers", built.panel.num_tickers()},
                           {"valid_days", fractions.valid_count()},
                           {"min_coverage", cfg.min_coverage},
                           {"low_coverage_tickers", std::move(flagged)}};
            const auto capped = std::count_if(u_series.points.begin(), u_series.points.end(),
                                              [](const UPoint& p) { return p.status != FitStatus::converged; });
            doc["u_series"] = {{"points", u_series.size()},
                               {"first_date", to_iso(u_series.points.front().date)},
                               {"last_date", to_iso(u_series.points.back().date)},
                               {"latest_u", u_series.points.back().u},
                               {"capped_fits", capped}};
            doc["event_comparison"] = to_json(compare_around(u_series, cfg.event_date));
            doc["alert"] = to_json(alerts);
            doc["danger"] = !alerts.intervals.empty();
            write_file(cfg.out_dir / "report.json", doc.dump(2) + "\n");
        }
        if (cfg.formats.count(OutputFormat::svg)) {
            ChartOptions chart;
            chart.event_date = cfg.event_date;
            std::string diagnostic;
            if (const auto svg = emit_svg(u_series, indicator, alerts, chart, &diagnostic)) {
                write_file(cfg.out_dir / "figure.svg", *svg);
            } else {
                log << "report: " << diagnostic << '\n';
            }
        }
    });

    log << "analysis: " << u_series.size() << " U values, " << alerts.intervals.size()
        << " danger-zone intervals\n";
    return alerts.intervals.empty() ? kExitOk : kExitDanger;
}

}  // namespace

std::optional<std::set<OutputFormat>> parse_formats(std::string_view text) {
    std::set<OutputFormat> formats;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto item = text.substr(pos, comma - pos);
        if (item == "csv") {
            formats.insert(OutputFormat::csv);
        } else if (item == "json") {
            formats.insert(OutputFormat::json);
        } else if (item == "svg") {
            formats.insert(OutputFormat::svg);
        } else {
            return std::nullopt;
        }
        pos = comma + 1;
    }
    return formats;
}

int run_analyze(const RunConfig& cfg, std::ostream& log) {
    try {
        return run(cfg, log);
    } catch (const StageError& e) {
        log << "error [" << e.stage() << "]: " << e.what() << '\n';
    } catch (const std::exception& e) {
        log << "error [report]: " << e.what() << '\n';
    }
    return kExitError;
}

}  // namespace mimicry
