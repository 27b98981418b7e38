#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "regge/conformal.hpp"
#include "regge/curvature.hpp"

namespace regge {

/// Eigenvalues ascending; column i of `vectors` belongs to `values[i]`.
struct Spectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

/// Full decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Each eigenvector is signed so that its largest-magnitude entry (first one
/// on ties) is positive. Throws PreconditionError when A is not symmetric to
/// `symmetry_tol` relative to its largest entry.
Spectrum eig_sym(const SymMatrix& a, double symmetry_tol = 1e-10);

/// Index of the eigenvector with the largest |overlap| with `reference`.
int track_eigenpair(const Spectrum& spectrum, const Eigen::VectorXd& reference);

enum class Termination { Converged, Stalled, BoundaryHit, MaxIters };

std::string_view to_string(Termination t);

struct SolveTrace {
    std::vector<Eigen::VectorXd> iterates;
    std::vector<double> residuals;  // one per iterate
    std::vector<double> steps;      // step length taken to reach iterate i (0 for the start)
    Termination termination = Termination::MaxIters;
    std::optional<std::uint64_t> seed;

    int iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

// Constant scalar curvature metrics in a conformal class.

struct CscOptions {
    double tolerance = 1e-10;
    int max_iterations = 100;
    int max_halvings = 30;
};

struct CscResult {
    ConformalPoint f;
    SolveTrace trace;
};

/// Damped Newton on f -> K_v - lambda L_v (or V_v) with the gauge
/// sum f = sum f0. The trace residual is the max-norm residual.
/// Throws DomainError when f0 is not admissible.
CscResult solve_csc(const ConformalClass& cls, Normalization which, const ConformalPoint& f0,
                    CscOptions opts = {});

/// Shift a conformal point so that f[index] = 0 (a pure rescaling).
ConformalPoint align_gauge(const ConformalPoint& f, int index);

// Descent.

struct Objective {
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
    std::function<bool(const Eigen::VectorXd&)> admissible;
    /// Optional gauge projection applied after every accepted step.
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> project;
    /// Optional distance-to-boundary measure; below `boundary_margin` the
    /// run stops with BoundaryHit.
    std::function<double(const Eigen::VectorXd&)> margin;
};

struct DescentOptions {
    double gradient_tolerance = 1e-9;
    int max_iterations = 20000;
    double armijo = 1e-4;
    double shrink = 0.5;
    double initial_step = 1.0;
    int max_backtracks = 80;
    double boundary_margin = 1e-12;
};

struct DescentResult {
    Eigen::VectorXd x;
    double value = 0.0;
    SolveTrace trace;  // residual = max-norm of the gradient
};

/// Gradient descent with Armijo backtracking. Trial points outside the
/// admissibility guard are never evaluated; they shrink the step instead.
DescentResult descend(const Objective& objective, const Eigen::VectorXd& x0,
                      DescentOptions opts = {});

/// A functional over all metrics of a complex. After every step the metric
/// is rescaled to mean edge length 1 (EHR, LEHR) or volume 1 (VEHR).
Objective length_objective(const Complex& complex, Functional which);

/// A normalized functional over a conformal class, with mean f fixed to 0.
Objective conformal_objective(const ConformalClass& cls, Functional which);

// Yamabe constant estimation.

struct YamabeOptions {
    int starts = 16;
    std::uint64_t seed = 1;
    double spread = 1.0;  // random starts are uniform in [-spread, spread]^V
    DescentOptions descent = {};
};

struct YamabeEstimate {
    /// Best value found. Always an upper bound on the infimum over the class.
    double value = 0.0;
    ConformalPoint point;
    Termination best_termination = Termination::MaxIters;
    /// The best run converged to an interior critical point.
    bool attained_interior = false;
    /// Some run that hit the boundary ended below every converged run.
    bool boundary_approach = false;
    int runs = 0;
    int converged = 0;
    int boundary_hits = 0;
    std::uint64_t seed = 0;
    std::vector<double> run_values;
    std::vector<Termination> run_terminations;
};

/// Multi-start minimization of LEHR (which = Length) or VEHR (which =
/// Volume) over a class. The first start is f = 0; the rest are seeded
/// random points. Inadmissible random starts are redrawn.
YamabeEstimate yamabe_constant_estimate(const ConformalClass& cls, Normalization which,
                                        YamabeOptions opts = {});

// Scalar root finding.

/// Bisection to |b - a| <= tol. Throws PreconditionError without a sign change.
double bisect_zero(const std::function<double(double)>& g, double a, double b, double tol);

// One-parameter families.

using Family = std::function<Eigen::VectorXd(double)>;

/// (t, 1, 1, 1, 1, t) on the double tetrahedron.
Eigen::VectorXd diag_family(double t);

/// Equally spaced samples a, ..., b (count >= 2, or a alone for count 1).
std::vector<double> linspace(double a, double b, int count);

/// Quantities: ehr, lehr, vehr, volume, total_length, csc_l, csc_v,
/// einstein_l, einstein_v (max-norm residuals), lambda_v_lehr,
/// lambda_v_vehr (Hessian eigenvalue tracked along (0,1,-1,-1,1,0)),
/// eig_lehr, eig_vehr (all length-Hessian eigenvalues, tracked by overlap
/// across rows), conf_lambda2 (conformal LEHR Hessian eigenvalue tracked
/// along (1,1,-1,-1), at csc metrics).
struct SweepTable {
    std::vector<std::string> columns;  // first column is t
    std::vector<std::vector<double>> rows;
    std::vector<bool> admissible;
};

SweepTable sweep_family(const Complex& complex, const Family& family,
                        const std::vector<double>& ts, const std::vector<std::string>& quantities);

/// Header row plus one line per row; inadmissible rows print "nan" values.
std::string to_delimited(const SweepTable& table, char delimiter = ',');

} // namespace regge
