#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Jacobi>

#include "regge/error.hpp"
#include "regge/solve.hpp"

namespace regge {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

} // namespace

Spectrum eig_sym(const SymMatrix& input, double symmetry_tol) {
    const Eigen::Index n = input.rows();
    if (input.cols() != n) throw PreconditionError("eig_sym needs a square matrix");
    const double scale = n == 0 ? 0.0 : input.cwiseAbs().maxCoeff();
    const double asym = n == 0 ? 0.0 : (input - input.transpose()).cwiseAbs().maxCoeff();
    if (!std::isfinite(scale) || asym > symmetry_tol * std::max(scale, 1e-300))
        throw PreconditionError("eig_sym needs a symmetric matrix (asymmetry " +
                                    std::to_string(asym) + ")",
                                asym);

    Eigen::MatrixXd a = 0.5 * (input + input.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double frob = a.norm();
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-16 * frob) break;
        for (Eigen::Index p = 0; p < n - 1; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                Eigen::JacobiRotation<double> rot;
                rot.makeJacobi(a, p, q);
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
                v.applyOnTheRight(p, q, rot);
            }
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

    Spectrum out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        Eigen::VectorXd col = v.col(order[k]);
        Eigen::Index lead = 0;
        for (Eigen::Index i = 1; i < n; ++i)
            if (std::abs(col[i]) > std::abs(col[lead]) + 1e-12) lead = i;
        if (col[lead] < 0) col = -col;
        out.vectors.col(k) = col;
    }
    return out;
}

int track_eigenpair(const Spectrum& spectrum, const Eigen::VectorXd& reference) {
    const Eigen::VectorXd unit = reference.normalized();
    int best = 0;
    double best_overlap = -1.0;
    for (Eigen::Index k = 0; k < spectrum.vectors.cols(); ++k) {
        const double overlap = std::abs(spectrum.vectors.col(k).dot(unit));
        if (overlap > best_overlap) {
            best_overlap = overlap;
            best = static_cast<int>(k);
        }
    }
    return best;
}

} // namespace regge
