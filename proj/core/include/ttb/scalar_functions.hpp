#ifndef TTB_SCALAR_FUNCTIONS_HPP
#define TTB_SCALAR_FUNCTIONS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "ttb/spectral.hpp"

namespace ttb {

// Vetted catalog entry for the verifier suites. Convexity of user-supplied
// functions is not checked symbolically; these flags are asserted by hand
// for the shipped functions and gate which verifiers may use them.
struct ScalarFunction {
    std::string name;
    ScalarFn fn;
    bool requires_positive = false;  // domain (0, inf)
    bool nondecreasing_convex = false; // usable where f must be nondecreasing convex
    bool convex = false;               // usable where plain convexity suffices
    bool log_exp_convex = false;       // x -> log f(e^x) convex
    bool exp_convex = false;           // x -> f(e^x) convex
};

inline ScalarFunction fn_identity() {
    return {"x", [](double x) { return x; }, false, true, true, true, true};
}

inline ScalarFunction fn_power(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "x^%g", p);
    return {buf,
            [p](double x) { return std::pow(x, p); },
            p != std::floor(p) || p < 0.0,
            p >= 1.0,
            p >= 1.0,
            true,   // log x^p(e^t) = p t, linear
            true};  // e^{p t} convex
}

inline ScalarFunction fn_exp() {
    return {"exp", [](double x) { return std::exp(x); }, false, true, true, true, true};
}

inline ScalarFunction fn_square() {
    return {"x^2", [](double x) { return x * x; }, false, false, true, true, true};
}

inline ScalarFunction fn_abs() {
    return {"|x|", [](double x) { return std::abs(x); }, false, false, true, false, false};
}

inline ScalarFunction fn_hinge(double c) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "max(x-%g,0)", c);
    return {buf, [c](double x) { return std::max(x - c, 0.0); },
            false, true, true, false, false};
}

// Concave-side entry; ships for the reverse-direction experiments only, all
// convexity flags off.
inline ScalarFunction fn_log_shift(double delta) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "log(%g+x)", delta);
    return {buf, [delta](double x) { return std::log(delta + x); },
            false, false, false, false, false};
}

// Named lookup used by the CLI (--function flag).
ScalarFunction scalar_function_by_name(const std::string& name);

} // namespace ttb

#endif
