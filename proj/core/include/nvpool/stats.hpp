#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nvpool {

double normal_pdf(double z);
double normal_cdf(double z);

// Inverse standard normal CDF (Wichura's AS 241, double precision).
double normal_quantile(double p);

// Mean of a normal(mu, sigma) left-truncated at zero.
double truncated_normal_mean(double mu, double sigma);

// E[p(x-q)^+ + h(q-x)^+] for x ~ normal(mean, sigma).
double expected_newsvendor_cost_normal(double mean, double sigma, double q,
                                       double p, double h);

// Kahan compensated accumulator.
struct KahanSum {
  double sum{0.0};
  double carry{0.0};

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
  void reset() { sum = 0.0; carry = 0.0; }
};

// Streaming mean / standard error over compensated sums.
class RunningMoments {
 public:
  void add(double x) {
    sum_.add(x);
    sumsq_.add(x * x);
    ++count_;
  }
  long long count() const { return count_; }
  double mean() const;
  double variance() const;  // unbiased
  double standard_error() const;

 private:
  KahanSum sum_;
  KahanSum sumsq_;
  long long count_{0};
};

struct WilsonInterval {
  double lower{0.0};
  double upper{0.0};
};

WilsonInterval wilson_interval(long long successes, long long trials,
                               double z = 1.959963984540054);

double mean_of(std::span<const double> xs);
double stddev_of(std::span<const double> xs);  // sample (n-1) convention
double median_of(std::vector<double> xs);      // by copy; sorts internally

}  // namespace nvpool
