#pragma once

#include <functional>
#include <string_view>

#include <Eigen/Core>

#include "regge/complex.hpp"
#include "regge/conformal.hpp"

namespace regge {

enum class Functional { EHR, LEHR, VEHR };

/// Which normalization defines lambda: L uses LEHR, V uses EHR / (3V).
enum class Normalization { Length, Volume };

Functional parse_functional(std::string_view name);
Normalization parse_normalization(std::string_view name);
std::string_view to_string(Functional which);
std::string_view to_string(Normalization which);

/// Dense symmetric matrix (length-space Hessians are |E| x |E|, conformal
/// Hessians and the Laplacian are |V| x |V|).
using SymMatrix = Eigen::MatrixXd;

/// All scalar curvature data of one admissible metric.
struct CurvatureReport {
    Eigen::VectorXd edge_curvature;    // K_e
    Eigen::VectorXd vertex_curvature;  // K_v
    Eigen::VectorXd vertex_length;     // L_v
    Eigen::VectorXd vertex_volume;     // V_v
    Eigen::VectorXd edge_volume;       // V_e = l_e dV/dl_e
    Eigen::VectorXd volume_gradient;   // dV/dl_e
    Eigen::VectorXd dual_length;       // l*_e
    double total_length = 0.0;
    double volume = 0.0;
    double ehr = 0.0;
    double lehr = 0.0;
    double vehr = 0.0;
    double lambda_volume = 0.0;  // EHR / (3V)
};

/// K_e = (2 pi - sum of incident dihedral angles) l_e. Throws DomainError on
/// inadmissible metrics.
Eigen::VectorXd edge_curvatures(const Complex& complex, const Metric& metric);

CurvatureReport functionals(const Complex& complex, const Metric& metric);

double evaluate(const Complex& complex, const Metric& metric, Functional which);

/// Analytic length gradient: dEHR/dl_e = K_e / l_e (Schlaefli), and the
/// quotient rule for the normalized functionals.
Eigen::VectorXd grad_lengths(const Complex& complex, const Metric& metric, Functional which);

/// Analytic conformal gradient at the metric induced by f; the background
/// only enters through that metric.
Eigen::VectorXd grad_conformal(const CurvatureReport& report, Functional which);
Eigen::VectorXd grad_conformal(const ConformalClass& cls, const ConformalPoint& f,
                               Functional which);

/// Discrete Laplacian: off-diagonal sum of l*_e / l_e over edges joining the
/// pair, zero row sums.
SymMatrix laplacian_matrix(const Complex& complex, const Metric& metric);

/// N_vv' = (K_e - LEHR l_e) / 4 summed over edges e = vv', N_vv = (K_v - LEHR L_v) / 2.
SymMatrix n_matrix(const Complex& complex, const Metric& metric);

/// csc residual tolerance below which `lehr_conformal_hessian_csc` accepts a metric.
inline constexpr double kCscHessianTolerance = 1e-8;

/// Conformal Hessian of LEHR at a constant L-scalar curvature metric,
/// -(2/L) Laplacian + (1/L) N, in the factor coordinates f of
/// `ConformalClass`. Throws PreconditionError when max |K_v - LEHR L_v|
/// exceeds `kCscHessianTolerance`.
SymMatrix lehr_conformal_hessian_csc(const Complex& complex, const Metric& metric);

/// Rewrites a conformal Hessian in log-scale coordinates u = f / 2, where
/// l_e = exp(u_v + u_w) L_e. Conformal Hessian values quoted in the
/// literature for the double tetrahedron use this chart.
SymMatrix to_log_scale_chart(const SymMatrix& factor_hessian);

/// K_e - lambda_L l_e or K_e - lambda_V V_e per edge.
Eigen::VectorXd einstein_residual(const Complex& complex, const Metric& metric,
                                  Normalization which);
Eigen::VectorXd einstein_residual(const CurvatureReport& report, const Metric& metric,
                                  Normalization which);

/// K_v - lambda_L L_v or K_v - lambda_V V_v per vertex.
Eigen::VectorXd csc_residual(const Complex& complex, const Metric& metric, Normalization which);
Eigen::VectorXd csc_residual(const CurvatureReport& report, Normalization which);

/// Curvature bounds in terms of the maximal edge degree D and the fatness
/// eps = V / (sum l_e)^3:
///   2 pi - pi D <= LEHR <= 2 pi,    VEHR >= min(0, 2 pi - pi D) eps^(-1/3).
struct BoundsReport {
    int max_edge_degree = 0;
    double lehr = 0.0;
    double lehr_lower = 0.0;
    double lehr_upper = 0.0;
    double fatness = 0.0;
    double vehr = 0.0;
    double vehr_lower = 0.0;
    bool lehr_ok = false;
    bool vehr_ok = false;
};

BoundsReport bounds_report(const Complex& complex, const Metric& metric);

// Numerical differentiation.

using ScalarFunction = std::function<double(const Eigen::VectorXd&)>;
using VectorFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct HessianOptions {
    /// Repeat with half the step and combine (h^4 accurate); scalar route only.
    bool richardson = false;
    /// Relative step; 0 picks eps^(1/4) for second differences of a scalar
    /// function and eps^(1/3) for central differences of a gradient.
    double relative_step = 0.0;
};

/// Central-difference Hessian of a scalar function, symmetrized. When an
/// evaluation throws DomainError the step is reduced once before giving up.
SymMatrix hessian_fd(const ScalarFunction& f, const Eigen::VectorXd& x, HessianOptions opts = {});

/// Hessian from central differences of an analytic gradient, symmetrized.
SymMatrix hessian_fd_gradient(const VectorFunction& grad, const Eigen::VectorXd& x,
                              HessianOptions opts = {});

/// Central-difference gradient of a scalar function.
Eigen::VectorXd gradient_fd(const ScalarFunction& f, const Eigen::VectorXd& x, double step = 0.0);

/// Length-space Hessian of a functional at a metric (FD of the analytic gradient).
SymMatrix length_hessian(const Complex& complex, const Metric& metric, Functional which);

/// Conformal Hessian of a functional at f (FD of the analytic conformal gradient).
SymMatrix conformal_hessian(const ConformalClass& cls, const ConformalPoint& f, Functional which);

} // namespace regge
