#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pinning {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean
  std::int64_t n = 0;
};

MeanSe mean_se(std::span<const double> xs);

// Ordinary least squares y = intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  std::vector<double> residuals;
  bool ok = false;  // needs >= 3 points and non-degenerate x spread
};

LineFit least_squares(std::span<const double> xs, std::span<const double> ys);

// Empirical covariance of paired samples, with a jackknife-free large-sample
// standard error (moment estimator).
struct CovEstimate {
  double cov = 0.0;
  double se = 0.0;
  std::int64_t n = 0;
};

CovEstimate covariance(std::span<const double> xs, std::span<const double> ys);

// Exact binomial (Clopper-Pearson style) confidence interval, computed by
// bisection on the binomial CDF evaluated in log space. Normal approximations
// break down near 0 and 1, which is exactly where blocking probabilities live.
struct BinomialCi {
  double lo = 0.0;
  double hi = 1.0;
};

BinomialCi binomial_ci(std::int64_t successes, std::int64_t n, double confidence = 0.95);

// P(Bin(n,p) <= k), evaluated stably in log space.
double binomial_cdf(std::int64_t k, std::int64_t n, double p);

}  // namespace pinning
