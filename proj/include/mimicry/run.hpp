#pragma once

#include "mimicry/betafit.hpp"
#include "mimicry/chart.hpp"
#include "mimicry/comovement.hpp"
#include "mimicry/indicator.hpp"
#include "mimicry/ingest.hpp"
#include "mimicry/synth.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace mimicry {

// Process exit codes. Nothing else is ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDanger = 2;

enum class OutputFormat { csv, json, svg };

// "csv,json,svg" in any order and subset. Returns nullopt on an unknown name
// or an empty list.
std::optional<std::set<OutputFormat>> parse_formats(std::string_view text);

struct RunConfig {
    std::optional<std::filesystem::path> input;
    std::optional<std::filesystem::path> universe;  // all input tickers when absent
    std::optional<SynthSpec> synth;
    ColumnMap columns;
    DateRange range;
    AnalysisConfig analysis;
    FitConfig fit;
    int min_participants = kDefaultMinParticipants;
    double min_coverage = 0.9;
    std::vector<double> index_levels;
    std::filesystem::path out_dir = ".";
    std::set<OutputFormat> formats{OutputFormat::csv, OutputFormat::json, OutputFormat::svg};
    Date event_date = ChartOptions{}.event_date;
};

// Runs ingest -> signs -> fractions -> rolling U -> indicator -> alerts and
// writes the requested artifacts into cfg.out_dir:
//   csv:  fractions.csv, useries.csv, indicator.csv
//   json: report.json
//   svg:  figure.svg
// Synthetic runs also write panel.csv and analyse it by re-reading that file.
//
// Returns kExitDanger when any danger-zone interval was found, kExitOk when
// none, and kExitError after printing a one-line diagnostic naming the
// failing stage to `log`.
int run_analyze(const RunConfig& cfg, std::ostream& log);

}  // namespace mimicry
