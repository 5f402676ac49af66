#include "ttb/stats.hpp"

#include <cmath>

#include "ttb/errors.hpp"

namespace ttb {

double log_binomial_coefficient(std::int64_t n, std::int64_t k) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double binomial_cdf(std::int64_t k, std::int64_t n, double p) {
    if (k < 0) return 0.0;
    if (k >= n) return 1.0;
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return 0.0;
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    double acc = 0.0;
    for (std::int64_t i = 0; i <= k; ++i) {
        const double term = log_binomial_coefficient(n, i) +
                            static_cast<double>(i) * lp +
                            static_cast<double>(n - i) * lq;
        acc += std::exp(term);
    }
    return std::min(acc, 1.0);
}

double clopper_pearson_upper(std::int64_t hits, std::int64_t trials, double alpha) {
    if (trials < 1) throw RangeError("clopper_pearson_upper: trials must be >= 1");
    if (hits < 0 || hits > trials)
        throw RangeError("clopper_pearson_upper: hits out of range");
    if (hits == trials) return 1.0;
    if (hits == 0) {
        // Closed form: P(Bin(n, p) = 0) = (1 - p)^n = alpha.
        return 1.0 - std::pow(alpha, 1.0 / static_cast<double>(trials));
    }
    double lo = static_cast<double>(hits) / static_cast<double>(trials);
    double hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (binomial_cdf(hits, trials, mid) >= alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace ttb
