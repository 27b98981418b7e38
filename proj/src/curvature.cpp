#include "regge/curvature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "regge/error.hpp"
#include "regge/geometry.hpp"

namespace regge {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

Functional parse_functional(std::string_view name) {
    const std::string s = lower(name);
    if (s == "ehr") return Functional::EHR;
    if (s == "lehr") return Functional::LEHR;
    if (s == "vehr") return Functional::VEHR;
    throw std::invalid_argument("unknown functional '" + std::string(name) + "'");
}

Normalization parse_normalization(std::string_view name) {
    const std::string s = lower(name);
    if (s == "l" || s == "length") return Normalization::Length;
    if (s == "v" || s == "volume") return Normalization::Volume;
    throw std::invalid_argument("unknown normalization '" + std::string(name) + "'");
}

std::string_view to_string(Functional which) {
    switch (which) {
    case Functional::EHR: return "ehr";
    case Functional::LEHR: return "lehr";
    case Functional::VEHR: return "vehr";
    }
    return "?";
}

std::string_view to_string(Normalization which) {
    return which == Normalization::Length ? "L" : "V";
}

Eigen::VectorXd edge_curvatures(const Complex& complex, const Metric& metric) {
    check_admissible(complex, metric.lengths());
    Eigen::VectorXd angle_sum = Eigen::VectorXd::Zero(complex.edge_count());
    for (int t = 0; t < complex.tet_count(); ++t) {
        const auto beta = dihedral_angles(tet_lengths(complex, metric.lengths(), t));
        for (int k = 0; k < 6; ++k) angle_sum[complex.tet(t).edges[k]] += beta[k];
    }
    return ((kTwoPi - angle_sum.array()) * metric.lengths().array()).matrix();
}

CurvatureReport functionals(const Complex& complex, const Metric& metric) {
    check_admissible(complex, metric.lengths());
    const int n_edges = complex.edge_count();
    const int n_verts = complex.vertex_count();
    const Eigen::VectorXd& l = metric.lengths();

    CurvatureReport r;
    Eigen::VectorXd angle_sum = Eigen::VectorXd::Zero(n_edges);
    r.volume_gradient = Eigen::VectorXd::Zero(n_edges);
    r.dual_length = Eigen::VectorXd::Zero(n_edges);
    r.vertex_volume = Eigen::VectorXd::Zero(n_verts);

    for (int t = 0; t < complex.tet_count(); ++t) {
        const Tet& tet = complex.tet(t);
        const TetGeometry g = tet_geometry(tet_lengths(complex, l, t));
        r.volume += g.volume;
        for (int k = 0; k < 6; ++k) {
            angle_sum[tet.edges[k]] += g.dihedral[k];
            r.volume_gradient[tet.edges[k]] += g.volume_gradient[k];
        }
        for (int i = 0; i < 4; ++i) {
            const double ha = g.face_heights[i] * g.face_areas[i] / 3.0;
            // Face i contains every local vertex except i.
            for (int a = 0; a < 4; ++a)
                if (a != i) r.vertex_volume[tet.vertices[a]] += ha;
            for (int k = 0; k < 3; ++k)
                r.dual_length[tet.edges[tet_face_edge_slot(i, k)]] +=
                    0.5 * g.edge_heights[i][k] * g.face_heights[i];
        }
    }

    r.edge_curvature = ((kTwoPi - angle_sum.array()) * l.array()).matrix();
    r.edge_volume = (l.array() * r.volume_gradient.array()).matrix();
    r.vertex_curvature = Eigen::VectorXd::Zero(n_verts);
    r.vertex_length = Eigen::VectorXd::Zero(n_verts);
    for (int e = 0; e < n_edges; ++e)
        for (int v : complex.edge(e).vertices) {
            r.vertex_curvature[v] += 0.5 * r.edge_curvature[e];
            r.vertex_length[v] += 0.5 * l[e];
        }

    r.total_length = l.sum();
    r.ehr = r.edge_curvature.sum();
    r.lehr = r.ehr / r.total_length;
    r.vehr = r.ehr / std::cbrt(r.volume);
    r.lambda_volume = r.ehr / (3.0 * r.volume);
    return r;
}

double evaluate(const Complex& complex, const Metric& metric, Functional which) {
    const Eigen::VectorXd k = edge_curvatures(complex, metric);
    const double ehr = k.sum();
    switch (which) {
    case Functional::EHR: return ehr;
    case Functional::LEHR: return ehr / metric.lengths().sum();
    case Functional::VEHR: {
        double volume = 0.0;
        for (int t = 0; t < complex.tet_count(); ++t)
            volume += tet_volume(tet_lengths(complex, metric.lengths(), t));
        return ehr / std::cbrt(volume);
    }
    }
    return ehr;
}

Eigen::VectorXd grad_lengths(const Complex& complex, const Metric& metric, Functional which) {
    const CurvatureReport r = functionals(complex, metric);
    const Eigen::VectorXd dehr = (r.edge_curvature.array() / metric.lengths().array()).matrix();
    switch (which) {
    case Functional::EHR: return dehr;
    case Functional::LEHR:
        return ((dehr.array() - r.lehr) / r.total_length).matrix();
    case Functional::VEHR:
        return (dehr - r.lambda_volume * r.volume_gradient) / std::cbrt(r.volume);
    }
    return dehr;
}

Eigen::VectorXd grad_conformal(const CurvatureReport& r, Functional which) {
    switch (which) {
    case Functional::EHR: return r.vertex_curvature;
    case Functional::LEHR:
        return (r.vertex_curvature - r.lehr * r.vertex_length) / r.total_length;
    case Functional::VEHR:
        return (r.vertex_curvature - r.lambda_volume * r.vertex_volume) / std::cbrt(r.volume);
    }
    return r.vertex_curvature;
}

Eigen::VectorXd grad_conformal(const ConformalClass& cls, const ConformalPoint& f,
                               Functional which) {
    return grad_conformal(functionals(cls.complex(), cls.metric_at(f)), which);
}

SymMatrix laplacian_matrix(const Complex& complex, const Metric& metric) {
    const Eigen::VectorXd dual = dual_lengths(complex, metric);
    SymMatrix lap = SymMatrix::Zero(complex.vertex_count(), complex.vertex_count());
    for (int e = 0; e < complex.edge_count(); ++e) {
        const auto [v, w] = complex.edge(e).vertices;
        const double weight = dual[e] / metric[e];
        lap(v, w) += weight;
        lap(w, v) += weight;
        lap(v, v) -= weight;
        lap(w, w) -= weight;
    }
    return lap;
}

namespace {

SymMatrix n_matrix_from(const Complex& complex, const Metric& metric, const CurvatureReport& r) {
    SymMatrix n = SymMatrix::Zero(complex.vertex_count(), complex.vertex_count());
    for (int e = 0; e < complex.edge_count(); ++e) {
        const auto [v, w] = complex.edge(e).vertices;
        const double entry = 0.25 * (r.edge_curvature[e] - r.lehr * metric[e]);
        n(v, w) += entry;
        n(w, v) += entry;
    }
    for (int v = 0; v < complex.vertex_count(); ++v)
        n(v, v) = 0.5 * (r.vertex_curvature[v] - r.lehr * r.vertex_length[v]);
    return n;
}

} // namespace

SymMatrix n_matrix(const Complex& complex, const Metric& metric) {
    return n_matrix_from(complex, metric, functionals(complex, metric));
}

SymMatrix lehr_conformal_hessian_csc(const Complex& complex, const Metric& metric) {
    const CurvatureReport r = functionals(complex, metric);
    const double residual = csc_residual(r, Normalization::Length).cwiseAbs().maxCoeff();
    if (!(residual <= kCscHessianTolerance))
        throw PreconditionError(
            "metric is not constant L-scalar curvature (max |K_v - LEHR L_v| = " +
                std::to_string(residual) + ")",
            residual);

    SymMatrix lap = SymMatrix::Zero(complex.vertex_count(), complex.vertex_count());
    for (int e = 0; e < complex.edge_count(); ++e) {
        const auto [v, w] = complex.edge(e).vertices;
        const double weight = r.dual_length[e] / metric[e];
        lap(v, w) += weight;
        lap(w, v) += weight;
        lap(v, v) -= weight;
        lap(w, w) -= weight;
    }
    return (-2.0 * lap + n_matrix_from(complex, metric, r)) / r.total_length;
}

SymMatrix to_log_scale_chart(const SymMatrix& factor_hessian) { return 4.0 * factor_hessian; }

Eigen::VectorXd einstein_residual(const CurvatureReport& r, const Metric& metric,
                                  Normalization which) {
    if (which == Normalization::Length) return r.edge_curvature - r.lehr * metric.lengths();
    return r.edge_curvature - r.lambda_volume * r.edge_volume;
}

Eigen::VectorXd einstein_residual(const Complex& complex, const Metric& metric,
                                  Normalization which) {
    return einstein_residual(functionals(complex, metric), metric, which);
}

Eigen::VectorXd csc_residual(const CurvatureReport& r, Normalization which) {
    if (which == Normalization::Length) return r.vertex_curvature - r.lehr * r.vertex_length;
    return r.vertex_curvature - r.lambda_volume * r.vertex_volume;
}

Eigen::VectorXd csc_residual(const Complex& complex, const Metric& metric, Normalization which) {
    return csc_residual(functionals(complex, metric), which);
}

BoundsReport bounds_report(const Complex& complex, const Metric& metric) {
    const CurvatureReport r = functionals(complex, metric);
    BoundsReport b;
    b.max_edge_degree = max_edge_degree(complex);
    b.lehr = r.lehr;
    b.lehr_lower = kTwoPi - std::numbers::pi * b.max_edge_degree;
    b.lehr_upper = kTwoPi;
    b.fatness = r.volume / std::pow(r.total_length, 3);
    b.vehr = r.vehr;
    b.vehr_lower = std::min(0.0, b.lehr_lower) / std::cbrt(b.fatness);
    b.lehr_ok = b.lehr_lower <= b.lehr && b.lehr <= b.lehr_upper;
    b.vehr_ok = b.vehr >= b.vehr_lower;
    return b;
}

} // namespace regge
