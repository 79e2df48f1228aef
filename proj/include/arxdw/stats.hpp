#pragma once

namespace arxdw::stats {

// Standard normal CDF.
double normal_cdf(double x);

// Inverse standard normal CDF on (0, 1). Rational approximation polished by
// one Halley step against erfc, accurate to close to machine precision.
// Throws std::invalid_argument outside (0, 1).
double normal_quantile(double p);

// Chi-square with one degree of freedom.
double chi2_cdf_1df(double t);

// Survival function; equals 1 for t <= 0.
double chi2_sf_1df(double t);

// Upper critical value for significance level alpha in (0, 1):
// the (1 - alpha)-quantile, i.e. the squared normal (1 - alpha/2)-quantile.
double chi2_quantile_1df(double alpha);

}  // namespace arxdw::stats
