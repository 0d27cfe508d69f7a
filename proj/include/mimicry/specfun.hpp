#pragma once

namespace mimicry::specfun {

// Special functions on the positive real axis. All three throw DomainError
// for x <= 0 or non-finite x.
//
// Accuracy targets over [1e-3, 1e6]: ln_gamma and digamma to 1e-10 relative,
// trigamma to 1e-8 relative. Near the interior zeros of ln_gamma (x = 1, 2)
// and digamma (x ~ 1.4616) Taylor expansions replace the shifted asymptotic
// series so relative accuracy holds there too.

double ln_gamma(double x);
double digamma(double x);
double trigamma(double x);

}  // namespace mimicry::specfun
