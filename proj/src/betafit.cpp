#include "mimicry/betafit.hpp"

#include "mimicry/error.hpp"
#include "mimicry/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mimicry {

namespace {

// T = ln f + ln(1 - f) peaks at f = 1/2.
const double kMaxMeanT = -std::log(4.0) + 1e-12;

constexpr double kScoreTolerance = 1e-12;
constexpr int kMaxIterations = 400;

void check_u(double u, const FitConfig& cfg) {
    if (!(u >= cfg.u_min && u <= cfg.u_max)) {
        throw DomainError("U = " + std::to_string(u) + " outside [" + std::to_string(cfg.u_min) +
                          ", " + std::to_string(cfg.u_max) + "]");
    }
}

double std_err_at(double u, std::size_t n) {
    const double info = static_cast<double>(n) * fisher_information(u);
    return info > 0.0 ? 1.0 / std::sqrt(info) : 0.0;
}

}  // namespace

void FitConfig::validate() const {
    if (!(u_min > 0.0 && u_min < u_max && std::isfinite(u_max))) {
        throw DomainError("fit caps must satisfy 0 < u_min < u_max");
    }
    if (!(tol > 0.0)) {
        throw DomainError("fit tolerance must be positive");
    }
}

const char* to_string(FitStatus status) {
    switch (status) {
        case FitStatus::converged: return "converged";
        case FitStatus::capped_low: return "capped_low";
        case FitStatus::capped_high: return "capped_high";
    }
    return "unknown";
}

SufficientStats sufficient_stats(std::span<const double> fractions) {
    if (fractions.size() < 2) {
        throw InsufficientDataError("U fit needs at least 2 fractions, have " +
                                    std::to_string(fractions.size()));
    }
    double sum = 0.0;
    for (double f : fractions) {
        if (!(f > 0.0 && f < 1.0)) {
            throw DomainError("fraction " + std::to_string(f) + " outside (0, 1)");
        }
        // log(1 - f) rather than log1p(-f): reflecting f -> 1 - f then only
        // swaps the two addends whenever 1 - f is exact.
        sum += std::log(f) + std::log(1.0 - f);
    }
    SufficientStats stats{fractions.size(), sum / static_cast<double>(fractions.size())};
    if (stats.mean_t > kMaxMeanT) {
        throw DomainError("mean of ln f + ln(1-f) exceeds -ln 4");
    }
    return stats;
}

double log_likelihood(double u, const SufficientStats& stats, const FitConfig& cfg) {
    check_u(u, cfg);
    if (stats.n == 0) {
        throw DomainError("log-likelihood needs at least one observation");
    }
    const double ln_beta = 2.0 * specfun::ln_gamma(u) - specfun::ln_gamma(2.0 * u);
    return static_cast<double>(stats.n) * ((u - 1.0) * stats.mean_t - ln_beta);
}

double score(double u, const SufficientStats& stats, const FitConfig& cfg) {
    check_u(u, cfg);
    return stats.mean_t - 2.0 * specfun::digamma(u) + 2.0 * specfun::digamma(2.0 * u);
}

double fisher_information(double u) {
    return 2.0 * specfun::trigamma(u) - 4.0 * specfun::trigamma(2.0 * u);
}

ModelFit fit_u(std::span<const double> fractions, const FitConfig& cfg) {
    return fit_u(sufficient_stats(fractions), cfg);
}

ModelFit fit_u(const SufficientStats& stats, const FitConfig& cfg) {
    cfg.validate();
    if (stats.n < 2) {
        throw InsufficientDataError("U fit needs at least 2 observations");
    }
    const double s_low = score(cfg.u_min, stats, cfg);
    if (s_low < 0.0) {
        return {cfg.u_min, std_err_at(cfg.u_min, stats.n), FitStatus::capped_low, stats.n};
    }
    const double s_high = score(cfg.u_max, stats, cfg);
    if (s_high > 0.0) {
        return {cfg.u_max, std_err_at(cfg.u_max, stats.n), FitStatus::capped_high, stats.n};
    }

    // Illinois-modified regula falsi on x = ln U, bracket [lo, hi] with
    // score(lo) >= 0 >= score(hi).
    double lo = std::log(cfg.u_min);
    double hi = std::log(cfg.u_max);
    double f_lo = s_low;
    double f_hi = s_high;
    int side = 0;
    double best_x = f_lo == 0.0 ? lo : hi;
    double best_f = f_lo == 0.0 ? 0.0 : f_hi;

    for (int iter = 0; iter < kMaxIterations && best_f != 0.0; ++iter) {
        double x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if (!(x > lo && x < hi)) {
            x = 0.5 * (lo + hi);
        }
        const double u = std::clamp(std::exp(x), cfg.u_min, cfg.u_max);
        const double f = score(u, stats, cfg);
        if (std::abs(f) < std::abs(best_f)) {
            best_x = x;
            best_f = f;
        }
        if (f > 0.0) {
            lo = x;
            f_lo = f;
            if (side == 1) {
                f_hi *= 0.5;
            }
            side = 1;
        } else if (f < 0.0) {
            hi = x;
            f_hi = f;
            if (side == -1) {
                f_lo *= 0.5;
            }
            side = -1;
        } else {
            break;
        }
        const bool narrow = hi - lo <= cfg.tol;
        const bool exhausted = std::nextafter(lo, hi) >= hi;
        if ((narrow && std::abs(best_f) <= kScoreTolerance) || exhausted) {
            break;
        }
    }

    const double u_hat = std::clamp(std::exp(best_x), cfg.u_min, cfg.u_max);
    return {u_hat, std_err_at(u_hat, stats.n), FitStatus::converged, stats.n};
}

}  // namespace mimicry
