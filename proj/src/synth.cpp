#include "mimicry/synth.hpp"

#include "mimicry/betafit.hpp"
#include "mimicry/error.hpp"
#include "mimicry/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mimicry {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

Date next_weekday(const Date& d) {
    std::chrono::sys_days day{d};
    do {
        day += std::chrono::days{1};
    } while (std::chrono::weekday{day} == std::chrono::Saturday ||
             std::chrono::weekday{day} == std::chrono::Sunday);
    return Date{day};
}

std::string ticker_name(int index, int count) {
    const auto width = std::max<std::size_t>(4, std::to_string(count - 1).size());
    auto digits = std::to_string(index);
    digits.insert(0, width - std::min(width, digits.size()), '0');
    return "SYN" + digits;
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& word : s_) {
        word = splitmix64(seed);
    }
}

Xoshiro256::result_type Xoshiro256::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = (*this)();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

double Xoshiro256::normal() {
    for (;;) {
        const double v1 = 2.0 * uniform() - 1.0;
        const double v2 = 2.0 * uniform() - 1.0;
        const double s = v1 * v1 + v2 * v2;
        if (s < 1.0 && s > 0.0) {
            return v1 * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double Xoshiro256::log_gamma_variate(double shape) {
    if (shape < 1.0) {
        const double boosted = log_gamma_variate(shape + 1.0);
        return boosted + std::log(uniform()) / shape;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double z = normal();
        const double base = 1.0 + c * z;
        if (base <= 0.0) {
            continue;
        }
        const double v = base * base * base;
        const double log_v = std::log(v);
        if (std::log(uniform()) < 0.5 * z * z + d - d * v + d * log_v) {
            return std::log(d) + log_v;
        }
    }
}

double Xoshiro256::symmetric_beta(double u) {
    for (;;) {
        const double log_x = log_gamma_variate(u);
        const double log_y = log_gamma_variate(u);
        const double f = 1.0 / (1.0 + std::exp(log_y - log_x));
        if (f > 0.0 && f < 1.0) {
            return f;
        }
    }
}

int SynthSpec::total_days() const {
    int total = 0;
    for (const auto& s : segments) {
        total += s.n_days;
    }
    return total;
}

void SynthSpec::validate() const {
    if (segments.empty()) {
        throw DomainError("synthetic spec has no segments");
    }
    for (const auto& s : segments) {
        if (!(s.u_true > 0.0) || !std::isfinite(s.u_true)) {
            throw DomainError("synthetic segment U must be positive");
        }
        if (s.n_days < 1) {
            throw DomainError("synthetic segment must span at least one day");
        }
    }
    if (!start_date.ok()) {
        throw DomainError("synthetic start date is not a valid date");
    }
}

std::vector<SynthSegment> parse_segments(std::string_view text) {
    std::vector<SynthSegment> segments;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto item = text.substr(pos, comma - pos);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw FormatError("synthetic segment '" + std::string(item) + "' is not U:DAYS");
        }
        SynthSegment seg;
        double days = 0.0;
        if (!parse_double(std::string(item.substr(0, colon)), seg.u_true) ||
            !parse_double(std::string(item.substr(colon + 1)), days) || days != std::floor(days) ||
            days < 1 || days > 1e7) {
            throw FormatError("synthetic segment '" + std::string(item) + "' is not U:DAYS");
        }
        seg.n_days = static_cast<int>(days);
        segments.push_back(seg);
        pos = comma + 1;
    }
    return segments;
}

std::vector<double> sample_symmetric_beta(double u, int n, std::uint64_t seed) {
    if (!(u > 0.0) || !std::isfinite(u)) {
        throw DomainError("Beta(U, U) needs U > 0");
    }
    if (n < 1) {
        throw DomainError("sample size must be at least 1");
    }
    Xoshiro256 rng(seed);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& f : out) {
        f = rng.symmetric_beta(u);
    }
    return out;
}

double grid_mle_oracle(std::span<const double> fractions, const UGrid& grid) {
    if (!(grid.lo > 0.0) || !(grid.step > 0.0) || grid.hi < grid.lo) {
        throw DomainError("U grid is empty or not on the positive axis");
    }
    const auto stats = sufficient_stats(fractions);
    const FitConfig bounds{grid.lo, grid.hi, 1e-9};
    const auto count = static_cast<std::size_t>(std::floor((grid.hi - grid.lo) / grid.step + 1e-9));
    double best_u = grid.lo;
    double best_ll = log_likelihood(grid.lo, stats, bounds);
    for (std::size_t i = 1; i <= count; ++i) {
        const double u = std::min(grid.lo + static_cast<double>(i) * grid.step, grid.hi);
        const double ll = log_likelihood(u, stats, bounds);
        if (ll > best_ll) {
            best_ll = ll;
            best_u = u;
        }
    }
    return best_u;
}

SynthPanel generate_panel(const SynthSpec& spec, int min_participants) {
    spec.validate();
    const int floor = std::max(2, min_participants);
    if (spec.n_tickers < floor) {
        throw DomainError("synthetic panel needs at least " + std::to_string(floor) +
                          " tickers, got " + std::to_string(spec.n_tickers));
    }
    const auto n = static_cast<std::size_t>(spec.n_tickers);
    const int days = spec.total_days();

    std::vector<std::string> tickers;
    tickers.reserve(n);
    for (int j = 0; j < spec.n_tickers; ++j) {
        tickers.push_back(ticker_name(j, spec.n_tickers));
    }

    // Start high enough that a ticker falling every day stays positive.
    std::vector<double> price(n, 100.0 + days);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    std::vector<PriceRecord> records;
    records.reserve(n * static_cast<std::size_t>(days + 1));
    Date date = spec.start_date;
    auto emit_row = [&] {
        for (std::size_t j = 0; j < n; ++j) {
            records.push_back({tickers[j], date, price[j]});
        }
    };
    emit_row();

    Xoshiro256 rng(spec.seed);
    std::vector<double> fractions;
    fractions.reserve(static_cast<std::size_t>(days));
    for (const auto& seg : spec.segments) {
        for (int d = 0; d < seg.n_days; ++d) {
            const double f = rng.symmetric_beta(seg.u_true);
            fractions.push_back(f);
            const auto ups = std::min(
                n, static_cast<std::size_t>(std::floor(f * static_cast<double>(n) + 0.5)));
            for (std::size_t i = n - 1; i > 0; --i) {
                std::swap(order[i], order[rng.below(i + 1)]);
            }
            for (std::size_t k = 0; k < n; ++k) {
                price[order[k]] += k < ups ? 1.0 : -1.0;
            }
            date = next_weekday(date);
            emit_row();
        }
    }

    auto built = build_panel(records, tickers);
    return {std::move(built.panel), std::move(fractions)};
}

}  // namespace mimicry
