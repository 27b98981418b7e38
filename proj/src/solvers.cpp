#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/QR>

#include "regge/error.hpp"
#include "regge/geometry.hpp"
#include "regge/solve.hpp"

namespace regge {

std::string_view to_string(Termination t) {
    switch (t) {
    case Termination::Converged: return "converged";
    case Termination::Stalled: return "stalled";
    case Termination::BoundaryHit: return "boundary-hit";
    case Termination::MaxIters: return "max-iters";
    }
    return "?";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Eigen::VectorXd csc_map(const ConformalClass& cls, Normalization which, const ConformalPoint& f) {
    return csc_residual(functionals(cls.complex(), cls.metric_at(f)), which);
}

Eigen::MatrixXd csc_jacobian(const ConformalClass& cls, Normalization which,
                             const ConformalPoint& f, const Eigen::VectorXd& r0) {
    const Eigen::Index n = f.size();
    Eigen::MatrixXd jac(r0.size(), n);
    Eigen::VectorXd y = f;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double h = std::cbrt(kEps) * std::max(std::abs(f[j]), 1.0);
        y[j] = f[j] + h;
        const bool up = cls.apply(y).admissible;
        Eigen::VectorXd rp = up ? csc_map(cls, which, y) : r0;
        y[j] = f[j] - h;
        const bool down = cls.apply(y).admissible;
        Eigen::VectorXd rm = down ? csc_map(cls, which, y) : r0;
        y[j] = f[j];
        const double width = (up ? h : 0.0) + (down ? h : 0.0);
        if (width == 0.0) throw DomainError("csc Jacobian stencil leaves the admissible set");
        jac.col(j) = (rp - rm) / width;
    }
    return jac;
}

} // namespace

ConformalPoint align_gauge(const ConformalPoint& f, int index) {
    return (f.array() - f[index]).matrix();
}

CscResult solve_csc(const ConformalClass& cls, Normalization which, const ConformalPoint& f0,
                    CscOptions opts) {
    cls.metric_at(f0);
    const Eigen::Index n = f0.size();
    const double gauge = f0.sum();

    CscResult out{f0, {}};
    ConformalPoint& f = out.f;
    SolveTrace& trace = out.trace;
    double last_step = 0.0;
    for (int it = 0;; ++it) {
        const Eigen::VectorXd r = csc_map(cls, which, f);
        const double res = r.cwiseAbs().maxCoeff();
        trace.iterates.push_back(f);
        trace.residuals.push_back(res);
        trace.steps.push_back(last_step);
        if (res < opts.tolerance) {
            trace.termination = Termination::Converged;
            break;
        }
        if (it >= opts.max_iterations) {
            trace.termination = Termination::MaxIters;
            break;
        }

        Eigen::MatrixXd system(n + 1, n);
        system.topRows(n) = csc_jacobian(cls, which, f, r);
        system.row(n).setOnes();
        Eigen::VectorXd rhs(n + 1);
        rhs.head(n) = -r;
        rhs[n] = gauge - f.sum();
        const Eigen::VectorXd delta = system.completeOrthogonalDecomposition().solve(rhs);

        double alpha = 1.0;
        bool admissible = cls.apply(f + delta).admissible;
        for (int k = 0; k < opts.max_halvings && !admissible; ++k) {
            alpha *= 0.5;
            admissible = cls.apply(f + alpha * delta).admissible;
        }
        if (!admissible) {
            trace.termination = Termination::BoundaryHit;
            break;
        }
        f += alpha * delta;
        last_step = alpha * delta.norm();
    }
    return out;
}

DescentResult descend(const Objective& obj, const Eigen::VectorXd& x0, DescentOptions opts) {
    if (!obj.admissible(x0)) throw DomainError("descent start is not admissible");
    DescentResult out;
    Eigen::VectorXd x = obj.project ? obj.project(x0) : x0;
    double fx = obj.value(x);
    if (!std::isfinite(fx)) throw DomainError("objective is not finite at the start");
    Eigen::VectorXd g = obj.gradient(x);
    double alpha = opts.initial_step;
    double last_step = 0.0;
    SolveTrace& trace = out.trace;

    for (int it = 0;; ++it) {
        const double gnorm = g.cwiseAbs().maxCoeff();
        trace.iterates.push_back(x);
        trace.residuals.push_back(gnorm);
        trace.steps.push_back(last_step);
        if (gnorm < opts.gradient_tolerance) {
            trace.termination = Termination::Converged;
            break;
        }
        if (obj.margin && obj.margin(x) < opts.boundary_margin) {
            trace.termination = Termination::BoundaryHit;
            break;
        }
        if (it >= opts.max_iterations) {
            trace.termination = Termination::MaxIters;
            break;
        }

        const double slope = g.squaredNorm();
        double a = alpha;
        bool accepted = false;
        bool any_admissible = false;
        Eigen::VectorXd y;
        double fy = 0.0;
        Eigen::VectorXd gy;
        for (int k = 0; k < opts.max_backtracks; ++k, a *= opts.shrink) {
            y = x - a * g;
            if (!obj.admissible(y)) continue;
            if (obj.project) {
                y = obj.project(y);
                if (!obj.admissible(y)) continue;
            }
            any_admissible = true;
            fy = obj.value(y);
            if (!std::isfinite(fy)) continue;
            if (fy <= fx - opts.armijo * a * slope) {
                accepted = true;
                break;
            }
            // Armijo cannot resolve decreases below roundoff; accept a step
            // that keeps f within roundoff and reduces the gradient.
            if (std::abs(fy - fx) <= 16.0 * kEps * std::max(std::abs(fx), 1.0)) {
                gy = obj.gradient(y);
                if (gy.norm() < g.norm()) {
                    accepted = true;
                    break;
                }
                gy.resize(0);
            }
        }
        if (!accepted) {
            trace.termination = any_admissible ? Termination::Stalled : Termination::BoundaryHit;
            break;
        }
        last_step = (y - x).norm();
        x = std::move(y);
        fx = fy;
        g = gy.size() ? std::move(gy) : obj.gradient(x);
        alpha = a / opts.shrink;
    }
    out.x = x;
    out.value = fx;
    return out;
}

Objective length_objective(const Complex& complex, Functional which) {
    Objective obj;
    const Complex* c = &complex;
    obj.value = [c, which](const Eigen::VectorXd& l) { return evaluate(*c, Metric(l), which); };
    obj.gradient = [c, which](const Eigen::VectorXd& l) {
        return grad_lengths(*c, Metric(l), which);
    };
    obj.admissible = [c](const Eigen::VectorXd& l) { return is_admissible(*c, l); };
    obj.project = [c, which](const Eigen::VectorXd& l) -> Eigen::VectorXd {
        if (which != Functional::VEHR) return l * (static_cast<double>(l.size()) / l.sum());
        double volume = 0.0;
        for (int t = 0; t < c->tet_count(); ++t) volume += tet_volume(tet_lengths(*c, l, t));
        return l / std::cbrt(volume);
    };
    obj.margin = [c](const Eigen::VectorXd& l) { return admissibility_margin(*c, l); };
    return obj;
}

Objective conformal_objective(const ConformalClass& cls, Functional which) {
    Objective obj;
    const ConformalClass* k = &cls;
    obj.value = [k, which](const Eigen::VectorXd& f) {
        return evaluate(k->complex(), k->metric_at(f), which);
    };
    obj.gradient = [k, which](const Eigen::VectorXd& f) { return grad_conformal(*k, f, which); };
    obj.admissible = [k](const Eigen::VectorXd& f) { return k->apply(f).admissible; };
    obj.project = [](const Eigen::VectorXd& f) -> Eigen::VectorXd {
        return (f.array() - f.mean()).matrix();
    };
    obj.margin = [k](const Eigen::VectorXd& f) {
        return admissibility_margin(k->complex(), k->apply(f).lengths);
    };
    return obj;
}

YamabeEstimate yamabe_constant_estimate(const ConformalClass& cls, Normalization which,
                                        YamabeOptions opts) {
    const Functional fn = which == Normalization::Length ? Functional::LEHR : Functional::VEHR;
    const Objective obj = conformal_objective(cls, fn);
    const Eigen::Index n = cls.complex().vertex_count();
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uniform(-opts.spread, opts.spread);

    YamabeEstimate est;
    est.seed = opts.seed;
    double best_converged = std::numeric_limits<double>::infinity();
    double best_boundary = std::numeric_limits<double>::infinity();
    bool have_best = false;
    for (int run = 0; run < std::max(opts.starts, 1); ++run) {
        ConformalPoint start = ConformalPoint::Zero(n);
        if (run > 0) {
            bool found = false;
            for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
                for (Eigen::Index i = 0; i < n; ++i) start[i] = uniform(rng);
                found = obj.admissible(start);
            }
            if (!found) continue;
        }
        const DescentResult res = descend(obj, start, opts.descent);
        const Termination term = res.trace.termination;
        ++est.runs;
        est.run_values.push_back(res.value);
        est.run_terminations.push_back(term);
        if (term == Termination::Converged) {
            ++est.converged;
            best_converged = std::min(best_converged, res.value);
        }
        if (term == Termination::BoundaryHit) {
            ++est.boundary_hits;
            best_boundary = std::min(best_boundary, res.value);
        }
        if (!have_best || res.value < est.value) {
            have_best = true;
            est.value = res.value;
            est.point = res.x;
            est.best_termination = term;
        }
    }
    est.attained_interior = have_best && est.best_termination == Termination::Converged;
    est.boundary_approach = best_boundary < best_converged;
    return est;
}

double bisect_zero(const std::function<double(double)>& g, double a, double b, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("bisection tolerance must be positive");
    double ga = g(a);
    const double gb = g(b);
    if (ga == 0.0) return a;
    if (gb == 0.0) return b;
    if (!(ga * gb < 0.0))
        throw PreconditionError("no sign change on [" + std::to_string(a) + ", " +
                                std::to_string(b) + "]");
    while (std::abs(b - a) > tol) {
        const double m = 0.5 * (a + b);
        const double gm = g(m);
        if (gm == 0.0) return m;
        if ((gm < 0.0) == (ga < 0.0)) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace regge
