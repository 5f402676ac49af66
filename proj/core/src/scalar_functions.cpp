#include "ttb/scalar_functions.hpp"

#include "ttb/errors.hpp"

namespace ttb {

ScalarFunction scalar_function_by_name(const std::string& name) {
    if (name == "x" || name == "identity") return fn_identity();
    if (name == "exp") return fn_exp();
    if (name == "x^2" || name == "square") return fn_square();
    if (name == "abs") return fn_abs();
    if (name.rfind("x^", 0) == 0) {
        try {
            return fn_power(std::stod(name.substr(2)));
        } catch (const std::exception&) {
            throw ConfigError("scalar function: cannot parse power in '" + name + "'");
        }
    }
    if (name.rfind("hinge:", 0) == 0) {
        try {
            return fn_hinge(std::stod(name.substr(6)));
        } catch (const std::exception&) {
            throw ConfigError("scalar function: cannot parse hinge offset in '" + name + "'");
        }
    }
    throw ConfigError("scalar function: unknown name '" + name +
                      "' (expected x, exp, x^2, x^<p>, abs, hinge:<c>)");
}

} // namespace ttb
