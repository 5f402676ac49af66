#include "ttb/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "ttb/config.hpp"
#include "ttb/errors.hpp"
#include "ttb/spectral.hpp"

namespace ttb {

namespace {

constexpr Index kKTraceDirectMax = 12;

double e_k_direct(const std::vector<double>& v, Index k) {
    // Recursive enumeration of k-subsets; tractable for d <= 12.
    const Index d = static_cast<Index>(v.size());
    double total = 0.0;
    std::function<void(Index, Index, double)> rec = [&](Index start, Index left, double prod) {
        if (left == 0) {
            total += prod;
            return;
        }
        for (Index i = start; i <= d - left; ++i)
            rec(i + 1, left - 1, prod * v[static_cast<std::size_t>(i)]);
    };
    rec(0, k, 1.0);
    return total;
}

double e_k_newton(const std::vector<double>& v, Index k) {
    // e_k from power sums: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
    std::vector<double> p(static_cast<std::size_t>(k) + 1, 0.0);
    for (Index i = 1; i <= k; ++i) {
        double s = 0.0;
        for (double x : v) s += std::pow(x, static_cast<double>(i));
        p[static_cast<std::size_t>(i)] = s;
    }
    std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (Index j = 1; j <= k; ++j) {
        double s = 0.0;
        double sign = 1.0;
        for (Index i = 1; i <= j; ++i) {
            s += sign * e[static_cast<std::size_t>(j - i)] * p[static_cast<std::size_t>(i)];
            sign = -sign;
        }
        e[static_cast<std::size_t>(j)] = s / static_cast<double>(j);
    }
    return e[static_cast<std::size_t>(k)];
}

} // namespace

void GaugeSpec::validate(Index d) const {
    switch (kind) {
        case Kind::KyFan:
        case Kind::KTrace:
            if (k < 1 || k > d) throw RangeError("GaugeSpec: k out of range");
            break;
        case Kind::Schatten:
            if (p < 1.0) throw RangeError("GaugeSpec: Schatten p must be >= 1");
            break;
        case Kind::Operator:
            break;
    }
}

std::string GaugeSpec::name() const {
    switch (kind) {
        case Kind::KyFan: return "kyfan(" + std::to_string(k) + ")";
        case Kind::Schatten: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "schatten(%g)", p);
            return buf;
        }
        case Kind::KTrace: return "ktrace(" + std::to_string(k) + ")";
        case Kind::Operator: return "operator";
    }
    return "?";
}

std::string GaugeSpec::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::KyFan: j["kind"] = "kyfan"; j["k"] = k; break;
        case Kind::Schatten: j["kind"] = "schatten"; j["p"] = p; break;
        case Kind::KTrace: j["kind"] = "ktrace"; j["k"] = k; break;
        case Kind::Operator: j["kind"] = "operator"; break;
    }
    return j.dump();
}

GaugeSpec GaugeSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("GaugeSpec: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "kyfan") return GaugeSpec::ky_fan(j.value("k", Index{1}));
    if (kind == "schatten") return GaugeSpec::schatten(j.value("p", 2.0));
    if (kind == "ktrace") return GaugeSpec::k_trace(j.value("k", Index{1}));
    if (kind == "operator") return GaugeSpec::op();
    throw ConfigError("GaugeSpec: unknown kind '" + kind + "'");
}

double gauge_apply(const GaugeSpec& gauge, std::vector<double> values) {
    gauge.validate(static_cast<Index>(values.size()));
    std::sort(values.begin(), values.end(), std::greater<double>());
    switch (gauge.kind) {
        case GaugeSpec::Kind::Operator:
            return values.empty() ? 0.0 : values.front();
        case GaugeSpec::Kind::KyFan: {
            double s = 0.0;
            for (Index i = 0; i < gauge.k; ++i) s += values[static_cast<std::size_t>(i)];
            return s;
        }
        case GaugeSpec::Kind::Schatten: {
            double s = 0.0;
            for (double v : values) s += std::pow(v, gauge.p);
            return std::pow(s, 1.0 / gauge.p);
        }
        case GaugeSpec::Kind::KTrace:
            return elementary_symmetric(values, gauge.k);
    }
    return 0.0;
}

double gauge_norm(const GaugeSpec& gauge, const SquareTensor& t) {
    return gauge_apply(gauge, singular_spectrum(t).values);
}

double ky_fan_norm(const SquareTensor& t, Index k) {
    if (k < 1 || k > t.dim()) throw RangeError("ky_fan_norm: k out of range");
    return gauge_apply(GaugeSpec::ky_fan(k), singular_spectrum(t).values);
}

double operator_norm(const SquareTensor& t) { return ky_fan_norm(t, 1); }

double schatten_norm(const SquareTensor& t, double p) {
    if (p < 1.0) throw RangeError("schatten_norm: p must be >= 1");
    return gauge_apply(GaugeSpec::schatten(p), singular_spectrum(t).values);
}

double elementary_symmetric(const std::vector<double>& values, Index k) {
    const Index d = static_cast<Index>(values.size());
    if (k < 1 || k > d) throw RangeError("elementary_symmetric: k out of range");
    if (d <= kKTraceDirectMax) return e_k_direct(values, k);
    return e_k_newton(values, k);
}

double k_trace(const HermitianTensor& h, Index k) {
    if (k < 1 || k > h.dim()) throw RangeError("k_trace: k out of range");
    return elementary_symmetric(eig_hermitian(h).eigenvalues, k);
}

GaugeHolderResult gauge_holder_check(const std::vector<std::vector<double>>& vectors,
                                     const std::vector<double>& weights,
                                     const GaugeSpec& gauge) {
    if (vectors.empty() || vectors.size() != weights.size())
        throw DomainError("gauge_holder_check: need one weight per vector");
    const std::size_t r = vectors.front().size();
    double wsum = 0.0;
    for (double w : weights) {
        if (w <= 0.0) throw DomainError("gauge_holder_check: weights must be positive");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw DomainError("gauge_holder_check: weights must sum to 1");
    for (const auto& b : vectors) {
        if (b.size() != r) throw DomainError("gauge_holder_check: ragged vectors");
        for (double v : b)
            if (v < 0.0) throw DomainError("gauge_holder_check: negative entry");
    }

    std::vector<double> geo(r, 1.0);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < r; ++j)
            geo[j] *= std::pow(vectors[i][j], weights[i]);

    GaugeHolderResult res;
    res.lhs = gauge_apply(gauge, geo);
    res.rhs = 1.0;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        res.rhs *= std::pow(gauge_apply(gauge, vectors[i]), weights[i]);
    res.holds = res.lhs <= res.rhs + config::kIneqAbsTol;
    return res;
}

} // namespace ttb
