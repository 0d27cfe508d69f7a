#include "mimicry/specfun.hpp"

#include "mimicry/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace mimicry::specfun {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;

// zeta(k) - 1 for k = 2..30
constexpr std::array<double, 29> kZetaMinusOne = {
    0.64493406684822643647,     0.2020569031595942854,      0.082323233711138191516,
    0.036927755143369926331,    0.017343061984449139715,    0.0083492773819228268398,
    0.0040773561979443393787,   0.0020083928260822144179,   0.00099457512781808533715,
    0.0004941886041194645587,   0.00024608655330804829864,  0.00012271334757848914675,
    6.1248135058704829259e-05,  3.0588236307020493552e-05,  1.5282259408651871733e-05,
    7.6371976378997622736e-06,  3.8172932649998398565e-06,  1.9082127165539389257e-06,
    9.5396203387279611315e-07,  4.7693298678780646312e-07,  2.3845050272773299e-07,
    1.1921992596531107307e-07,  5.9608189051259479612e-08,  2.9803503514652280186e-08,
    1.4901554828365041235e-08,  7.450711789835429492e-09,   3.7253340247884570548e-09,
    1.8626597235130490064e-09,  9.3132743241966818287e-10,
};

// Positive root of digamma split into two doubles.
constexpr double kDigammaRootHi = 1.4616321449683622;
constexpr double kDigammaRootLo = 9.549995429965697e-17;

// Taylor coefficients of digamma about its root: (-1)^(n+1) zeta(n+1, root), n = 1..15.
constexpr std::array<double, 15> kDigammaRootTaylor = {
    0.9676722454476212,    -0.4427631689835921,   0.258499760955651,
    -0.16394270544240652,  0.10782405069126237,   -0.07219956125645471,
    0.04880428816414311,   -0.03316112647484736,  0.022597648232218104,
    -0.01542476590494896,  0.010538791616612175,  -0.007204534386356869,
    0.004926781395729853,  -0.003369801655439328, 0.002305126326734928,
};

constexpr double kAsymptoticFloor = 10.0;
constexpr double kLnGammaSeriesRadius = 0.2;
constexpr double kDigammaRootRadius = 0.05;

void check_domain(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(name) + " requires a positive finite argument");
    }
}

// ln Gamma(1 + z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) / k z^k
double ln_gamma_near_one(double z) {
    double sum = 0.0;
    for (int k = 30; k >= 2; --k) {
        const double zeta = 1.0 + kZetaMinusOne[static_cast<std::size_t>(k - 2)];
        const double coeff = (k % 2 == 0 ? zeta : -zeta) / k;
        sum = (sum + coeff) * z;
    }
    return (sum - kEulerGamma) * z;
}

// ln Gamma(2 + z) = (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) / k z^k
double ln_gamma_near_two(double z) {
    double sum = 0.0;
    for (int k = 30; k >= 2; --k) {
        const double zm1 = kZetaMinusOne[static_cast<std::size_t>(k - 2)];
        const double coeff = (k % 2 == 0 ? zm1 : -zm1) / k;
        sum = (sum + coeff) * z;
    }
    return (sum + (1.0 - kEulerGamma)) * z;
}

double stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv * (1.0 / 12 +
               inv2 * (-1.0 / 360 +
                       inv2 * (1.0 / 1260 +
                               inv2 * (-1.0 / 1680 +
                                       inv2 * (1.0 / 1188 +
                                               inv2 * (-691.0 / 360360 + inv2 * (1.0 / 156)))))));
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

double ln_gamma(double x) {
    check_domain(x, "ln_gamma");
    if (std::abs(x - 1.0) <= kLnGammaSeriesRadius) {
        return ln_gamma_near_one(x - 1.0);
    }
    if (std::abs(x - 2.0) <= kLnGammaSeriesRadius) {
        return ln_gamma_near_two(x - 2.0);
    }
    if (x >= kAsymptoticFloor) {
        return stirling(x);
    }
    double product = 1.0;
    while (x < kAsymptoticFloor) {
        product *= x;
        x += 1.0;
    }
    return stirling(x) - std::log(product);
}

double digamma(double x) {
    check_domain(x, "digamma");
    if (std::abs(x - kDigammaRootHi) < kDigammaRootRadius) {
        const double h = (x - kDigammaRootHi) - kDigammaRootLo;
        double sum = 0.0;
        for (auto it = kDigammaRootTaylor.rbegin(); it != kDigammaRootTaylor.rend(); ++it) {
            sum = (sum + *it) * h;
        }
        return sum;
    }
    double shift = 0.0;
    while (x < kAsymptoticFloor) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    const double series =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 -
                                inv2 * (1.0 / 240 -
                                        inv2 * (1.0 / 132 -
                                                inv2 * (691.0 / 32760 - inv2 * (1.0 / 12)))))));
    return shift + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
    check_domain(x, "trigamma");
    double shift = 0.0;
    while (x < kAsymptoticFloor) {
        shift += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv * (1.0 +
               inv * (0.5 +
                      inv * (1.0 / 6 +
                             inv2 * (-1.0 / 30 +
                                     inv2 * (1.0 / 42 +
                                             inv2 * (-1.0 / 30 +
                                                     inv2 * (5.0 / 66 +
                                                             inv2 * (-691.0 / 2730 +
                                                                     inv2 * (7.0 / 6)))))))));
    return shift + series;
}

}  // namespace mimicry::specfun
