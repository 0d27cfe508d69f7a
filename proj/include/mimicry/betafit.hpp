#pragma once

#include <cstddef>
#include <span>

namespace mimicry {

// Data side of the symmetric Beta(U, U) likelihood. The window mean of
// T = ln f + ln(1 - f) is sufficient for U.
struct SufficientStats {
    std::size_t n = 0;
    double mean_t = 0.0;
};

struct FitConfig {
    double u_min = 1e-3;
    double u_max = 1e3;
    double tol = 1e-9;  // relative, on U

    // Throws DomainError unless 0 < u_min < u_max and tol > 0.
    void validate() const;
};

enum class FitStatus { converged, capped_low, capped_high };

const char* to_string(FitStatus status);

struct ModelFit {
    double u_hat = 0.0;
    double std_err = 0.0;
    FitStatus status = FitStatus::converged;
    std::size_t n = 0;
};

// Throws InsufficientDataError for fewer than two fractions and DomainError
// for a fraction outside the open interval (0, 1).
SufficientStats sufficient_stats(std::span<const double> fractions);

// n * [(U - 1) mean_t - ln B(U, U)]. Throws DomainError when u lies outside
// the caps of `cfg` or stats.n is zero.
double log_likelihood(double u, const SufficientStats& stats, const FitConfig& cfg = {});

// Per-observation derivative of log_likelihood in U:
// mean_t - 2 digamma(U) + 2 digamma(2U). Strictly decreasing in U.
double score(double u, const SufficientStats& stats, const FitConfig& cfg = {});

// Observed Fisher information per observation, 2 trigamma(U) - 4 trigamma(2U).
double fisher_information(double u);

// Maximum-likelihood U for a window of advancing fractions.
ModelFit fit_u(std::span<const double> fractions, const FitConfig& cfg = {});

// Same, from precomputed statistics.
ModelFit fit_u(const SufficientStats& stats, const FitConfig& cfg = {});

}  // namespace mimicry
