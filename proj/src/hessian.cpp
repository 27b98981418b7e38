#include <cmath>
#include <limits>

#include "regge/curvature.hpp"
#include "regge/error.hpp"
#include "regge/geometry.hpp"

namespace regge {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Eigen::VectorXd steps_for(const Eigen::VectorXd& x, double relative) {
    return (x.array().abs().max(1.0) * relative).matrix();
}

SymMatrix second_differences(const ScalarFunction& f, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& h) {
    const Eigen::Index n = x.size();
    SymMatrix hess(n, n);
    const double f0 = f(x);
    Eigen::VectorXd y = x;
    for (Eigen::Index i = 0; i < n; ++i) {
        y[i] = x[i] + h[i];
        const double fp = f(y);
        y[i] = x[i] - h[i];
        const double fm = f(y);
        y[i] = x[i];
        hess(i, i) = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for (Eigen::Index j = 0; j < i; ++j) {
            auto at = [&](double si, double sj) {
                y[i] = x[i] + si * h[i];
                y[j] = x[j] + sj * h[j];
                const double v = f(y);
                y[i] = x[i];
                y[j] = x[j];
                return v;
            };
            const double v = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h[i] * h[j]);
            hess(i, j) = hess(j, i) = v;
        }
    }
    return hess;
}

SymMatrix gradient_differences(const VectorFunction& grad, const Eigen::VectorXd& x,
                               const Eigen::VectorXd& h) {
    const Eigen::Index n = x.size();
    SymMatrix hess(n, n);
    Eigen::VectorXd y = x;
    for (Eigen::Index j = 0; j < n; ++j) {
        y[j] = x[j] + h[j];
        const Eigen::VectorXd gp = grad(y);
        y[j] = x[j] - h[j];
        const Eigen::VectorXd gm = grad(y);
        y[j] = x[j];
        hess.col(j) = (gp - gm) / (2.0 * h[j]);
    }
    return 0.5 * (hess + hess.transpose());
}

template <class Fn>
auto with_step_retry(Fn&& fn, double relative) {
    try {
        return fn(relative);
    } catch (const DomainError&) {
        return fn(0.1 * relative);
    }
}

} // namespace

SymMatrix hessian_fd(const ScalarFunction& f, const Eigen::VectorXd& x, HessianOptions opts) {
    double relative = opts.relative_step;
    if (relative <= 0.0) relative = opts.richardson ? std::pow(kEps, 1.0 / 6.0) : std::pow(kEps, 0.25);
    return with_step_retry(
        [&](double rel) -> SymMatrix {
            const Eigen::VectorXd h = steps_for(x, rel);
            SymMatrix coarse = second_differences(f, x, h);
            if (!opts.richardson) return coarse;
            SymMatrix fine = second_differences(f, x, 0.5 * h);
            return (4.0 * fine - coarse) / 3.0;
        },
        relative);
}

SymMatrix hessian_fd_gradient(const VectorFunction& grad, const Eigen::VectorXd& x,
                              HessianOptions opts) {
    const double relative = opts.relative_step > 0.0 ? opts.relative_step : std::cbrt(kEps);
    return with_step_retry(
        [&](double rel) { return gradient_differences(grad, x, steps_for(x, rel)); }, relative);
}

Eigen::VectorXd gradient_fd(const ScalarFunction& f, const Eigen::VectorXd& x, double step) {
    const Eigen::VectorXd h = steps_for(x, step > 0.0 ? step : std::cbrt(kEps));
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd y = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        y[i] = x[i] + h[i];
        const double fp = f(y);
        y[i] = x[i] - h[i];
        const double fm = f(y);
        y[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h[i]);
    }
    return g;
}

SymMatrix length_hessian(const Complex& complex, const Metric& metric, Functional which) {
    check_admissible(complex, metric.lengths());
    return hessian_fd_gradient(
        [&](const Eigen::VectorXd& l) { return grad_lengths(complex, Metric(l), which); },
        metric.lengths());
}

SymMatrix conformal_hessian(const ConformalClass& cls, const ConformalPoint& f, Functional which) {
    cls.metric_at(f);
    return hessian_fd_gradient(
        [&](const Eigen::VectorXd& x) { return grad_conformal(cls, x, which); }, f);
}

} // namespace regge
