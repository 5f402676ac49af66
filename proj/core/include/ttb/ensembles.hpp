#ifndef TTB_ENSEMBLES_HPP
#define TTB_ENSEMBLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttb/tail_bounds.hpp"
#include "ttb/tensor.hpp"

namespace ttb {

class RngStream;

// Distribution description of the i.i.d. random Hermitian summands.
struct EnsembleSpec {
    enum class Kind { BoundedPSD, ZeroMeanSubexp, DiagonalRademacher, WishartLike };

    Kind kind = Kind::BoundedPSD;
    Shape shape;
    int m = 1;          // summand count
    double R = 1.0;     // BoundedPSD eigenvalue cap
    std::optional<HermitianTensor> A; // ZeroMeanSubexp moment tensor
    double scale = 1.0; // DiagonalRademacher / WishartLike
    int dof = 1;        // WishartLike
    std::optional<double> normalization; // optional global scale gamma

    void validate() const;
    std::string kind_name() const;

    std::string to_json() const;
    static EnsembleSpec from_json(const std::string& text);
    static EnsembleSpec from_json_file(const std::string& path);
};

// One raw draw from the ensemble.
HermitianTensor sample(const EnsembleSpec& spec, RngStream& rng);

// Draw for a specific (trial, summand) slot. Streams are derived from
// (seed, trial, j) only, so results do not depend on worker scheduling.
// ZeroMeanSubexp emits X and -X on alternating trials (exact zero mean over
// even trial counts).
HermitianTensor sample_trial(const EnsembleSpec& spec, std::uint64_t seed,
                             std::int64_t trial, int j);

struct TailEstimate {
    std::int64_t trials = 0;
    std::int64_t hits = 0;
    double point_estimate = 0.0;
    double ci_upper_95 = 0.0;
    double condition_holds_rate = 0.0;
};

// Monte Carlo estimate of Pr(||g(sum X_j)||_(k) >= theta). When condition_t
// is set the order condition g(exp(tS)) >= exp(t g(S)) is evaluated per
// trial at that t and the holds-rate reported.
TailEstimate estimate_tail(const EnsembleSpec& spec, const PolynomialSpec& g, Index k,
                           double theta, std::int64_t trials, std::uint64_t seed,
                           int workers = 1, std::optional<double> condition_t = {});

enum class BoundKind { Chernoff, Bernstein, Generic };

struct CertificationRow {
    double theta = 0.0;
    double analytic_bound = 0.0;
    std::optional<double> t_opt;
    double first_order_residual = 0.0;
    std::int64_t hits = 0;
    double point_estimate = 0.0;
    double ci_upper_95 = 0.0;
    double condition_holds_rate = 0.0;
    bool comparable = false; // analytic bound <= 1
    bool violation = false;  // comparable and ci_upper > bound
};

struct CertificationReport {
    std::string ensemble;
    std::string polynomial;
    Index k = 1;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    BoundKind bound_kind = BoundKind::Chernoff;
    double c_latala = 1.0;
    // Statistics feeding the analytic side (shared across summands).
    double sigma1_bar = 0.0;
    double xi = 0.0;
    double upsilon = 0.0;
    double sigma1_A_sq = 0.0;
    std::int64_t statistic_samples = 0;
    std::vector<CertificationRow> rows;
    bool any_violation = false;

    std::string to_json() const; // byte-stable, 17 significant digits
    std::string curve_csv() const;
};

// End-to-end certification: estimates the ensemble statistics, evaluates the
// analytic bound over the theta grid, runs the Monte Carlo tail estimate on
// a shared sample pass, and compares wherever the analytic bound is <= 1.
CertificationReport certify(const EnsembleSpec& spec, const PolynomialSpec& g, Index k,
                            const std::vector<double>& theta_grid, BoundKind bound_kind,
                            std::int64_t trials, std::uint64_t seed, int workers = 1,
                            double c_latala = 1.0, std::int64_t statistic_samples = 2000);

} // namespace ttb

#endif
