#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "regge/curvature.hpp"
#include "regge/error.hpp"
#include "regge/geometry.hpp"
#include "regge/solve.hpp"

using namespace regge;

namespace {

constexpr double kPi = std::numbers::pi;
const double kBetaRegular = std::acos(1.0 / 3.0);

Eigen::VectorXd vec(std::initializer_list<double> xs) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

Eigen::VectorXd random_metric(const Complex& c, std::mt19937_64& rng, double lo = 0.8,
                              double hi = 1.2) {
    std::uniform_real_distribution<double> u(lo, hi);
    Eigen::VectorXd l(c.edge_count());
    do {
        for (int e = 0; e < c.edge_count(); ++e) l[e] = u(rng);
    } while (!is_admissible(c, l));
    return l;
}

double rayleigh(const SymMatrix& h, const Eigen::VectorXd& v) { return v.dot(h * v) / v.dot(v); }

} // namespace

TEST(Functionals, EqualLengthDoubleTetrahedron) {
    const Complex dt = double_tetrahedron();
    const CurvatureReport r = functionals(dt, Metric::uniform(6, 1.0));
    // Each edge lies in both tetrahedra with the regular dihedral angle.
    const double ke = 2.0 * kPi - 2.0 * kBetaRegular;
    const double volume = 2.0 / (6.0 * std::sqrt(2.0));
    for (int e = 0; e < 6; ++e) EXPECT_NEAR(r.edge_curvature[e], ke, 1e-14);
    EXPECT_NEAR(r.ehr, 6.0 * ke, 1e-13);
    EXPECT_NEAR(r.lehr, ke, 1e-14);
    EXPECT_NEAR(r.lehr, 3.82127, 1e-5);
    EXPECT_NEAR(r.volume, volume, 1e-15);
    EXPECT_NEAR(r.vehr, 6.0 * ke / std::cbrt(volume), 1e-12);
    EXPECT_NEAR(r.vehr, 37.11681, 1e-5);
    for (int v = 0; v < 4; ++v) {
        EXPECT_NEAR(r.vertex_curvature[v], 1.5 * ke, 1e-14);
        EXPECT_NEAR(r.vertex_length[v], 1.5, 1e-15);
        EXPECT_NEAR(r.vertex_volume[v], 0.75 * volume, 1e-15);
    }
    for (int e = 0; e < 6; ++e) EXPECT_NEAR(r.dual_length[e], 1.0 / (6.0 * std::sqrt(2.0)), 1e-15);
}

TEST(Functionals, SixHundredCellEdgeCurvature) {
    const Complex c = six_hundred_cell();
    const Eigen::VectorXd k = edge_curvatures(c, Metric::uniform(c.edge_count(), 1.0));
    for (int e = 0; e < c.edge_count(); ++e) ASSERT_NEAR(k[e], 2.0 * kPi - 5.0 * kBetaRegular, 1e-12);
    EXPECT_NEAR(k[0], 0.12839, 1e-5);
}

TEST(Functionals, EvaluateAgreesWithReport) {
    const Complex dt = double_tetrahedron();
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const Metric m(random_metric(dt, rng));
        const CurvatureReport r = functionals(dt, m);
        EXPECT_NEAR(evaluate(dt, m, Functional::EHR), r.ehr, 1e-13);
        EXPECT_NEAR(evaluate(dt, m, Functional::LEHR), r.lehr, 1e-13);
        EXPECT_NEAR(evaluate(dt, m, Functional::VEHR), r.vehr, 1e-11);
        EXPECT_EQ(edge_curvatures(dt, m), r.edge_curvature);
    }
}

TEST(Functionals, InadmissibleMetricThrows) {
    const Complex dt = double_tetrahedron();
    const Metric bad(vec({1.4143, 1, 1, 1, 1, 1.4143}));
    EXPECT_THROW(functionals(dt, bad), DomainError);
    EXPECT_THROW(evaluate(dt, bad, Functional::LEHR), DomainError);
    EXPECT_THROW(grad_lengths(dt, bad, Functional::VEHR), DomainError);
}

TEST(Functionals, HomogeneityAndScaleInvariance) {
    const Complex dt = double_tetrahedron();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const Eigen::VectorXd l = random_metric(dt, rng);
        const CurvatureReport r = functionals(dt, Metric(l));
        const CurvatureReport s = functionals(dt, Metric(3.7 * l));
        EXPECT_NEAR(s.ehr, 3.7 * r.ehr, 1e-12 * s.ehr);
        EXPECT_NEAR(s.lehr, r.lehr, 1e-12 * r.lehr);
        EXPECT_NEAR(s.vehr, r.vehr, 1e-12 * r.vehr);
    }
}

TEST(Functionals, VertexSumsAndVertexVolume) {
    for (const Complex& c : {double_tetrahedron(), pentachoron_boundary()}) {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 20; ++i) {
            const Metric m(random_metric(c, rng));
            const CurvatureReport r = functionals(c, m);
            EXPECT_NEAR(r.vertex_curvature.sum(), r.ehr, 1e-12 * std::abs(r.ehr));
            EXPECT_NEAR(r.vertex_length.sum(), r.total_length, 1e-12 * r.total_length);
            EXPECT_NEAR(r.vertex_volume.sum(), 3.0 * r.volume, 1e-12 * r.volume);
            EXPECT_NEAR(r.edge_volume.sum(), 3.0 * r.volume, 1e-12 * r.volume);
            // V_v is the conformal derivative of V: half the sum of V_e at v.
            for (int v = 0; v < c.vertex_count(); ++v) {
                double half = 0.0;
                for (int e : c.edges_at_vertex(v)) half += 0.5 * r.edge_volume[e];
                EXPECT_NEAR(r.vertex_volume[v], half, 1e-12);
            }
        }
    }
}

TEST(Functionals, LehrWithinCurvatureBounds) {
    const Complex dt = double_tetrahedron();
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const double lehr = evaluate(dt, Metric(random_metric(dt, rng, 0.2, 2.0)), Functional::LEHR);
        EXPECT_GE(lehr, 0.0);
        EXPECT_LE(lehr, 2.0 * kPi);
    }
}

TEST(Functionals, DoubleTetrahedronEdgeCurvaturesArePositive) {
    const Complex dt = double_tetrahedron();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Eigen::VectorXd k = edge_curvatures(dt, Metric(random_metric(dt, rng, 0.2, 2.0)));
        EXPECT_GT(k.minCoeff(), 0.0);
    }
}

TEST(Gradients, LengthGradientsMatchFiniteDifferences) {
    for (const Complex& c : {double_tetrahedron(), pentachoron_boundary()}) {
        std::mt19937_64 rng(5);
        for (auto which : {Functional::EHR, Functional::LEHR, Functional::VEHR}) {
            for (int i = 0; i < 10; ++i) {
                const Eigen::VectorXd l = random_metric(c, rng);
                const Eigen::VectorXd an = grad_lengths(c, Metric(l), which);
                const Eigen::VectorXd fd = gradient_fd(
                    [&](const Eigen::VectorXd& x) { return evaluate(c, Metric(x), which); }, l);
                EXPECT_LT((an - fd).cwiseAbs().maxCoeff(), 1e-6 * an.cwiseAbs().maxCoeff())
                    << to_string(which);
            }
        }
    }
}

TEST(Gradients, ConformalGradientsMatchFiniteDifferences) {
    for (const Complex& c : {double_tetrahedron(), pentachoron_boundary()}) {
        std::mt19937_64 rng(6);
        for (auto which : {Functional::EHR, Functional::LEHR, Functional::VEHR}) {
            for (int i = 0; i < 10; ++i) {
                const ConformalClass cls(c, Metric(random_metric(c, rng)));
                const ConformalPoint f = ConformalPoint::Random(c.vertex_count()) * 0.05;
                const Eigen::VectorXd an = grad_conformal(cls, f, which);
                const Eigen::VectorXd fd = gradient_fd(
                    [&](const Eigen::VectorXd& x) { return evaluate(c, cls.metric_at(x), which); }, f);
                EXPECT_LT((an - fd).cwiseAbs().maxCoeff(), 1e-6 * an.cwiseAbs().maxCoeff())
                    << to_string(which);
            }
        }
    }
}

TEST(Gradients, SchlaefliIdentity) {
    std::mt19937_64 rng(7);
    const Complex dt = double_tetrahedron();
    for (int i = 0; i < 20; ++i) {
        const Eigen::VectorXd x = random_metric(dt, rng, 0.7, 1.3);
        TetLengths l;
        for (int k = 0; k < 6; ++k) l[k] = x[k];
        for (int j = 0; j < 6; ++j) {
            TetLengths up = l, down = l;
            up[j] += 1e-6;
            down[j] -= 1e-6;
            const auto bu = dihedral_angles(up);
            const auto bd = dihedral_angles(down);
            double sum = 0.0;
            for (int k = 0; k < 6; ++k) sum += l[k] * (bu[k] - bd[k]) / 2e-6;
            EXPECT_NEAR(sum, 0.0, 1e-6);
        }
    }
}

TEST(Residuals, EinsteinImpliesCsc) {
    const Complex dt = double_tetrahedron();
    for (double k : {1.0, 0.25, 4.0}) {
        const Metric m = Metric::uniform(6, k);
        for (auto which : {Normalization::Length, Normalization::Volume}) {
            EXPECT_LT(einstein_residual(dt, m, which).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, k));
            EXPECT_LT(csc_residual(dt, m, which).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, k));
        }
    }
    const Metric skew(vec({1.1, 0.9, 1.0, 1.05, 0.95, 1.2}));
    EXPECT_GT(einstein_residual(dt, skew, Normalization::Length).cwiseAbs().maxCoeff(), 1e-3);
    EXPECT_GT(csc_residual(dt, skew, Normalization::Volume).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(Residuals, EquihedralMetricsAreCsc) {
    const Complex dt = double_tetrahedron();
    for (double t = 1.0; t < std::sqrt(2.0); t += 0.01) {
        const Metric m(diag_family(t));
        EXPECT_LT(csc_residual(dt, m, Normalization::Length).cwiseAbs().maxCoeff(), 1e-10) << t;
        EXPECT_LT(csc_residual(dt, m, Normalization::Volume).cwiseAbs().maxCoeff(), 1e-10) << t;
    }
}

TEST(Laplacian, RowSumsSymmetryAndEqualLengthEntries) {
    const Complex dt = double_tetrahedron();
    const SymMatrix lap = laplacian_matrix(dt, Metric::uniform(6, 1.0));
    const double w = 1.0 / (6.0 * std::sqrt(2.0));
    for (int v = 0; v < 4; ++v) {
        EXPECT_NEAR(lap.row(v).sum(), 0.0, 1e-15);
        EXPECT_NEAR(lap(v, v), -3.0 * w, 1e-15);
        for (int u = 0; u < 4; ++u)
            if (u != v) {
                EXPECT_NEAR(lap(u, v), w, 1e-15);
            }
    }
    std::mt19937_64 rng(8);
    const SymMatrix r = laplacian_matrix(dt, Metric(random_metric(dt, rng)));
    EXPECT_LT((r - r.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(r.rowwise().sum().cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Laplacian, NegativeSemidefiniteOnEquihedralMetrics) {
    const Complex dt = double_tetrahedron();
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.7, 1.3);
    for (int i = 0; i < 20;) {
        const double a = u(rng), b = u(rng), c = u(rng);
        const Eigen::VectorXd l = vec({a, b, c, c, b, a});
        if (!is_admissible(dt, l)) continue;
        ++i;
        EXPECT_LT(eig_sym(laplacian_matrix(dt, Metric(l))).values.maxCoeff(), 1e-10);
    }
}

TEST(ConformalHessian, ClosedFormMatchesFiniteDifferences) {
    const Complex dt = double_tetrahedron();
    for (double t : {1.0, 1.1, 1.25, 1.35}) {
        const Metric m(diag_family(t));
        const ConformalClass cls(dt, m);
        const SymMatrix closed = lehr_conformal_hessian_csc(dt, m);
        const SymMatrix fd = conformal_hessian(cls, ConformalPoint::Zero(4), Functional::LEHR);
        EXPECT_LT((closed - fd).cwiseAbs().maxCoeff(), 1e-7) << t;
    }
}

TEST(ConformalHessian, SixHundredCell) {
    const Complex c = six_hundred_cell();
    const Metric m = Metric::uniform(c.edge_count(), 1.0);
    const ConformalClass cls(c, m);
    const SymMatrix closed = lehr_conformal_hessian_csc(c, m);
    const SymMatrix fd = conformal_hessian(cls, ConformalPoint::Zero(c.vertex_count()), Functional::LEHR);
    EXPECT_LT((closed - fd).cwiseAbs().maxCoeff(), 1e-7);
}

TEST(ConformalHessian, EqualLengthValuesInBothCharts) {
    const Complex dt = double_tetrahedron();
    const SymMatrix h = lehr_conformal_hessian_csc(dt, Metric::uniform(6, 1.0));
    const Spectrum s = eig_sym(h);
    EXPECT_NEAR(s.values[0], 0.0, 1e-12);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(s.values[k], std::sqrt(2.0) / 9.0, 1e-12);
    const Spectrum u = eig_sym(to_log_scale_chart(h));
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(u.values[k], 4.0 * std::sqrt(2.0) / 9.0, 1e-12);
}

TEST(ConformalHessian, LogScaleChartMatchesDirectDifferentiation) {
    // Differentiate LEHR in u with l_e = exp(u_v + u_w) L_e directly.
    const Complex dt = double_tetrahedron();
    const ConformalClass cls(dt, Metric::uniform(6, 1.0));
    const SymMatrix direct = hessian_fd(
        [&](const Eigen::VectorXd& u) { return evaluate(dt, cls.metric_at(2.0 * u), Functional::LEHR); },
        Eigen::VectorXd::Zero(4), {.richardson = true});
    const SymMatrix chart = to_log_scale_chart(lehr_conformal_hessian_csc(dt, Metric::uniform(6, 1.0)));
    EXPECT_LT((direct - chart).cwiseAbs().maxCoeff(), 1e-7);
}

TEST(ConformalHessian, RequiresCscMetric) {
    const Complex dt = double_tetrahedron();
    const Metric skew(vec({1.1, 0.9, 1.0, 1.05, 0.95, 1.2}));
    try {
        lehr_conformal_hessian_csc(dt, skew);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& e) {
        EXPECT_GT(e.residual(), kCscHessianTolerance);
    }
}

TEST(ConformalHessian, NMatrixVanishesAtEinsteinMetrics) {
    const Complex dt = double_tetrahedron();
    EXPECT_LT(n_matrix(dt, Metric::uniform(6, 1.0)).cwiseAbs().maxCoeff(), 1e-14);
}

// Along (t,1,1,1,1,t) the Hessian is determined by six second derivatives
// a..f. The symmetry vectors are exact eigenvectors at every t; the closed
// forms in a and c use l as a null vector and so hold at critical points only.
class FamilyHessianTable : public ::testing::TestWithParam<std::tuple<Functional, double>> {};

TEST_P(FamilyHessianTable, EigenvaluesFromSamples) {
    const auto [which, t] = GetParam();
    const Complex dt = double_tetrahedron();
    const Eigen::VectorXd l = diag_family(t);
    const SymMatrix samples = hessian_fd(
        [&](const Eigen::VectorXd& x) { return evaluate(dt, Metric(x), which); }, l,
        {.richardson = true});
    const double a = samples(0, 1), b = samples(0, 0), c = samples(1, 2);
    const double d = samples(1, 1), e = samples(0, 5), f = samples(1, 4);

    const SymMatrix h = length_hessian(dt, Metric(l), which);
    const Spectrum s = eig_sym(h);
    const double tol = 1e-6 * std::max(1.0, s.values.cwiseAbs().maxCoeff() / 10.0);
    auto eigen_along = [&](const Eigen::VectorXd& v) { return s.values[track_eigenpair(s, v)]; };
    const Eigen::VectorXd v1 = vec({1, 0, 0, 0, 0, -1});
    const Eigen::VectorXd v2 = vec({0, 1, 0, 0, -1, 0});
    const Eigen::VectorXd v3 = vec({0, 1, -1, -1, 1, 0});
    EXPECT_NEAR(eigen_along(v1), b - e, tol);
    EXPECT_NEAR(eigen_along(v2), d - f, tol);
    EXPECT_NEAR(eigen_along(v3), d + f - 2 * c, tol);
    for (const auto& v : {v1, v2, v3}) {
        EXPECT_LT((h * v - rayleigh(h, v) * v).norm(), 1e-7 * std::max(1.0, std::abs(rayleigh(h, v))));
    }
    // Scale invariance: H l = -grad F.
    EXPECT_LT((h * l + grad_lengths(dt, Metric(l), which)).cwiseAbs().maxCoeff(), tol);

    if (t == 1.0) {
        const Eigen::VectorXd v4 = vec({1, -0.5, -0.5, -0.5, -0.5, 1});
        EXPECT_NEAR(4 * a + t * e + t * b, 0.0, tol);
        EXPECT_NEAR(2 * c + d + f + 2 * t * a, 0.0, tol);
        EXPECT_NEAR(eigen_along(v3), -4 * c - 2 * t * a, tol);
        EXPECT_NEAR(rayleigh(h, v4), -(2 * t + 4 / t) * a, tol);
        EXPECT_LT((h * l).norm(), 1e-8);
    }
}

INSTANTIATE_TEST_SUITE_P(Family, FamilyHessianTable,
                         ::testing::Combine(::testing::Values(Functional::LEHR, Functional::VEHR),
                                            ::testing::Values(1.0, 1.1, 1.3)));

TEST(ConformalHessian, ConstantsSpanTheNullspace) {
    const Complex dt = double_tetrahedron();
    for (double t : {1.0, 1.2}) {
        const ConformalClass cls(dt, Metric(diag_family(t)));
        for (auto which : {Functional::LEHR, Functional::VEHR}) {
            const SymMatrix h = conformal_hessian(cls, ConformalPoint::Zero(4), which);
            EXPECT_LT((h * Eigen::VectorXd::Ones(4)).cwiseAbs().maxCoeff(), 1e-8);
        }
    }
}

// Off t = 1 the family is not critical, so the signature statement concerns
// the Hessian on the complement of the scaling direction.
namespace {

SymMatrix scale_fixed_hessian(const Complex& dt, double t) {
    const Eigen::VectorXd u = diag_family(t).normalized();
    const Eigen::MatrixXd p = Eigen::MatrixXd::Identity(6, 6) - u * u.transpose();
    const SymMatrix h = p * length_hessian(dt, Metric(diag_family(t)), Functional::VEHR) * p;
    return 0.5 * (h + h.transpose());
}

} // namespace

TEST(VehrSignature, SemidefiniteBeforeCriticalT) {
    const Complex dt = double_tetrahedron();
    for (double t : {1.1, 1.2}) {
        const Spectrum s = eig_sym(scale_fixed_hessian(dt, t));
        EXPECT_NEAR(s.values[0], 0.0, 1e-8) << t;
        EXPECT_GT(s.values[1], 1.0) << t;
        EXPECT_GT(std::abs(s.vectors.col(0).dot(diag_family(t).normalized())), 1.0 - 1e-12);
    }
    for (double t : {1.3, 1.35}) {
        const Spectrum s = eig_sym(scale_fixed_hessian(dt, t));
        EXPECT_LT(s.values[0], -1.0) << t;
        EXPECT_GT(s.values[5], 1.0) << t;
        const Eigen::VectorXd v = vec({0, 1, -1, -1, 1, 0}).normalized();
        EXPECT_GT(std::abs(s.vectors.col(0).dot(v)), 1.0 - 1e-8) << t;
    }
}

TEST(VehrSignature, FullHessianIndefiniteAwayFromCriticalPoints) {
    // l^T H l = 0 while H l = -grad != 0 forces a negative direction.
    const Complex dt = double_tetrahedron();
    const Spectrum s = eig_sym(length_hessian(dt, Metric(diag_family(1.1)), Functional::VEHR));
    EXPECT_LT(s.values[0], -1e-3);
}

TEST(Bounds, PentachoronAndDoubleTetrahedron) {
    const Complex p = pentachoron_boundary();
    std::mt19937_64 rng(10);
    for (int i = 0; i < 20; ++i) {
        const BoundsReport b = bounds_report(p, Metric(random_metric(p, rng, 0.6, 1.4)));
        EXPECT_EQ(b.max_edge_degree, 3);
        EXPECT_NEAR(b.lehr_lower, -kPi, 1e-15);
        EXPECT_NEAR(b.lehr_upper, 2 * kPi, 1e-15);
        EXPECT_TRUE(b.lehr_ok);
        EXPECT_TRUE(b.vehr_ok);
        EXPECT_GT(b.fatness, 0.0);
    }
    const BoundsReport d = bounds_report(double_tetrahedron(), Metric::uniform(6, 1.0));
    EXPECT_EQ(d.max_edge_degree, 2);
    EXPECT_DOUBLE_EQ(d.lehr_lower, 0.0);
    EXPECT_DOUBLE_EQ(d.vehr_lower, 0.0);
    EXPECT_NEAR(d.fatness, (2.0 / (6.0 * std::sqrt(2.0))) / 216.0, 1e-15);
}

TEST(NumericalDifferentiation, Quadratic) {
    Eigen::MatrixXd a(3, 3);
    a << 2, 1, 0, 1, 3, -1, 0, -1, 4;
    const auto q = [&](const Eigen::VectorXd& x) { return 0.5 * x.dot(a * x) + x.sum(); };
    const Eigen::VectorXd x0 = vec({0.3, -1.2, 2.0});
    EXPECT_LT((hessian_fd(q, x0) - a).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_LT((hessian_fd(q, x0, {.richardson = true}) - a).cwiseAbs().maxCoeff(), 1e-7);
    const auto g = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return a * x + Eigen::VectorXd::Ones(3);
    };
    EXPECT_LT((hessian_fd_gradient(g, x0) - a).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT((gradient_fd(q, x0) - g(x0)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(NumericalDifferentiation, RichardsonImprovesSmoothFunction) {
    const auto f = [](const Eigen::VectorXd& x) { return std::exp(x[0]) * std::sin(x[1]); };
    const Eigen::VectorXd x0 = vec({0.4, 0.9});
    Eigen::MatrixXd exact(2, 2);
    const double e = std::exp(0.4), s = std::sin(0.9), c = std::cos(0.9);
    exact << e * s, e * c, e * c, -e * s;
    const double plain = (hessian_fd(f, x0, {.relative_step = 1e-2}) - exact).cwiseAbs().maxCoeff();
    const double rich =
        (hessian_fd(f, x0, {.richardson = true, .relative_step = 1e-2}) - exact).cwiseAbs().maxCoeff();
    EXPECT_LT(rich, plain / 100.0);
}

TEST(Parsing, FunctionalAndNormalizationNames) {
    EXPECT_EQ(parse_functional("LEHR"), Functional::LEHR);
    EXPECT_EQ(parse_functional("vehr"), Functional::VEHR);
    EXPECT_EQ(parse_functional("ehr"), Functional::EHR);
    EXPECT_THROW(parse_functional("hehr"), std::invalid_argument);
    EXPECT_EQ(parse_normalization("L"), Normalization::Length);
    EXPECT_EQ(parse_normalization("v"), Normalization::Volume);
    EXPECT_THROW(parse_normalization("x"), std::invalid_argument);
    EXPECT_EQ(to_string(Functional::VEHR), "vehr");
    EXPECT_EQ(to_string(Normalization::Length), "L");
}
