#pragma once

namespace savetx {

double normal_pdf(double x);

// Standard normal CDF via erfc.
double normal_cdf(double x);

// Quantile of the standard normal, accurate to better than 1e-10 on the
// supported range [1e-8, 1 - 1e-8]. Arguments outside that range are rejected.
double normal_quantile(double p);

// Same evaluation without the range guard, defined on all of (0, 1).
// Used by samplers that need tail quantiles.
double normal_quantile_unchecked(double p);

}  // namespace savetx
