#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "regge/complex.hpp"

namespace regge {

/// Per-vertex conformal factors f_v.
using ConformalPoint = Eigen::VectorXd;

/// Lengths induced by a conformal point, with their admissibility.
struct InducedMetric {
    Eigen::VectorXd lengths;
    bool admissible = false;
};

/// A discrete conformal class: background lengths L_e on a complex; a point f
/// maps to l_e = exp((f_v + f_w) / 2) L_e for e = vw.
///
/// Holds a non-owning reference to the complex, which must outlive the class.
class ConformalClass {
public:
    /// Throws DomainError if the background is not admissible.
    ConformalClass(const Complex& complex, Metric background);

    const Complex& complex() const noexcept { return *complex_; }
    const Metric& background() const noexcept { return background_; }

    InducedMetric apply(const ConformalPoint& f) const;

    /// Induced metric; throws DomainError when it is not admissible.
    Metric metric_at(const ConformalPoint& f) const;

private:
    const Complex* complex_;
    Metric background_;
};

/// Length cross ratios of one tetrahedron (local labels 1..4):
/// c13 = l12 l34 / (l14 l23), c14 = l12 l34 / (l13 l24).
struct CrossRatios {
    double c13 = 0.0;
    double c14 = 0.0;
};

std::vector<CrossRatios> cross_ratios(const Complex& complex, const Eigen::VectorXd& lengths);

/// The equihedral point of a class on the double tetrahedron.
struct EquihedralPoint {
    ConformalPoint f;
    Eigen::VectorXd lengths;
    bool admissible = false;
};

/// Closed-form conformal point (gauge f_4 = 0) at which opposite edges of the
/// generating tetrahedron have equal lengths. Requires a 4-vertex complex whose
/// edges are the six vertex pairs (the double tetrahedron). Degenerate
/// solutions are returned with `admissible == false`.
EquihedralPoint equihedral_point(const ConformalClass& cls);

/// True when |l12 - l34|, |l13 - l24| and |l14 - l23| are all at most
/// tol * max l. Expects lengths in double-tetrahedron edge order.
bool is_equihedral(const Eigen::VectorXd& lengths, double tol);

} // namespace regge
