#ifndef TTB_STATS_HPP
#define TTB_STATS_HPP

#include <cstdint>

namespace ttb {

// One-sided exact (Clopper-Pearson) upper confidence bound for a binomial
// proportion: the largest p with P(Bin(n, p) <= hits) >= alpha is the
// 1-alpha upper limit. Solved by bisection on the exact binomial CDF.
double clopper_pearson_upper(std::int64_t hits, std::int64_t trials, double alpha = 0.05);

// log C(n, k) via lgamma.
double log_binomial_coefficient(std::int64_t n, std::int64_t k);

// P(Bin(n, p) <= k), exact summation in log space.
double binomial_cdf(std::int64_t k, std::int64_t n, double p);

} // namespace ttb

#endif
