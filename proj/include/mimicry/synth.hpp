#pragma once

#include "mimicry/date.hpp"
#include "mimicry/ingest.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace mimicry {

// xoshiro256** (Blackman & Vigna), state seeded from a 64-bit value through
// splitmix64. Streams are fully determined by the seed on every platform.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();
    // Uniform integer in [0, bound), unbiased. bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    // Standard normal, Marsaglia polar method.
    double normal();
    // Natural log of a Gamma(shape, 1) variate: Marsaglia-Tsang for shape >= 1,
    // shape boost G(a) = G(a+1) U^(1/a) below that. Kept in log space so tiny
    // shapes do not underflow.
    double log_gamma_variate(double shape);
    // Symmetric Beta(u, u) as X / (X + Y) with X, Y ~ Gamma(u). Draws that
    // round to exactly 0 or 1 are redrawn.
    double symmetric_beta(double u);

private:
    std::uint64_t s_[4];
};

inline constexpr std::uint64_t kDefaultSeed = 20180205;

struct SynthSegment {
    double u_true = 1.0;
    int n_days = 1;
};

struct SynthSpec {
    std::vector<SynthSegment> segments;
    std::uint64_t seed = kDefaultSeed;
    int n_tickers = 500;
    Date start_date{std::chrono::year{2016}, std::chrono::January, std::chrono::day{4}};

    int total_days() const;
    // Throws DomainError when a segment has u_true <= 0 or n_days < 1, or
    // when there are no segments.
    void validate() const;
};

// "4:400,1:120" -> {(4, 400), (1, 120)}. Throws FormatError.
std::vector<SynthSegment> parse_segments(std::string_view text);

// n independent Beta(u, u) draws. Throws DomainError for u <= 0 or n < 1.
std::vector<double> sample_symmetric_beta(double u, int n, std::uint64_t seed);

struct UGrid {
    double lo = 0.1;
    double hi = 20.0;
    double step = 1e-3;
};

// Exhaustive argmax of the symmetric-beta log-likelihood over `grid`.
// Throws DomainError for an empty or non-positive grid.
double grid_mle_oracle(std::span<const double> fractions, const UGrid& grid = {});

struct SynthPanel {
    PricePanel panel;
    std::vector<double> fractions;  // the drawn advancing fraction of each day
};

// Weekday calendar from spec.start_date with one seed row plus one row per
// synthetic day. Each day round(f * n_tickers) randomly chosen tickers step
// up by one currency unit and the rest step down by one.
// Throws DomainError when n_tickers < max(2, min_participants).
SynthPanel generate_panel(const SynthSpec& spec, int min_participants = 2);

}  // namespace mimicry
