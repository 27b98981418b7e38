#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "regge/error.hpp"
#include "regge/geometry.hpp"
#include "regge/solve.hpp"

namespace regge {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Eigenvalues of one functional's length Hessian, kept in the order of the
// first admissible row and re-matched by eigenvector overlap.
struct Tracker {
    Eigen::MatrixXd previous;

    Eigen::VectorXd update(const Spectrum& s) {
        const Eigen::Index n = s.values.size();
        if (previous.cols() != n) {
            previous = s.vectors;
            return s.values;
        }
        Eigen::MatrixXd overlap = (previous.transpose() * s.vectors).cwiseAbs();
        Eigen::VectorXd values(n);
        Eigen::MatrixXd next(n, n);
        for (Eigen::Index round = 0; round < n; ++round) {
            Eigen::Index i = 0;
            Eigen::Index j = 0;
            overlap.maxCoeff(&i, &j);
            values[i] = s.values[j];
            Eigen::VectorXd v = s.vectors.col(j);
            if (v.dot(previous.col(i)) < 0) v = -v;
            next.col(i) = v;
            overlap.row(i).setConstant(-1.0);
            overlap.col(j).setConstant(-1.0);
        }
        previous = next;
        return values;
    }
};

Eigen::VectorXd signature_vector() {
    Eigen::VectorXd v(6);
    v << 0, 1, -1, -1, 1, 0;
    return v;
}

double tracked_value(const Spectrum& s, const Eigen::VectorXd& reference) {
    return s.values[track_eigenpair(s, reference)];
}

} // namespace

Eigen::VectorXd diag_family(double t) {
    Eigen::VectorXd l(6);
    l << t, 1, 1, 1, 1, t;
    return l;
}

std::vector<double> linspace(double a, double b, int count) {
    if (count < 1) throw std::invalid_argument("linspace needs at least one sample");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = a;
        return out;
    }
    for (int i = 0; i < count; ++i) out[i] = a + (b - a) * i / (count - 1);
    out.back() = b;
    return out;
}

SweepTable sweep_family(const Complex& complex, const Family& family,
                        const std::vector<double>& ts, const std::vector<std::string>& quantities) {
    const int n_edges = complex.edge_count();
    SweepTable table;
    table.columns.push_back("t");
    for (const auto& q : quantities) {
        if (q == "eig_lehr" || q == "eig_vehr") {
            for (int k = 0; k < n_edges; ++k) table.columns.push_back(fmt::format("{}_{}", q, k));
        } else if (q == "conf_lambda2") {
            table.columns.push_back("conf_lambda2");
            table.columns.push_back("conf_lambda2_log");
        } else if (q == "ehr" || q == "lehr" || q == "vehr" || q == "volume" ||
                   q == "total_length" || q == "csc_l" || q == "csc_v" || q == "einstein_l" ||
                   q == "einstein_v" || q == "lambda_v_lehr" || q == "lambda_v_vehr") {
            table.columns.push_back(q);
        } else {
            throw std::invalid_argument("unknown sweep quantity '" + q + "'");
        }
    }

    Tracker track_lehr;
    Tracker track_vehr;
    for (double t : ts) {
        std::vector<double> row{t};
        const Eigen::VectorXd x = family(t);
        if (x.size() != n_edges || !is_admissible(complex, x)) {
            row.resize(table.columns.size(), kNaN);
            table.rows.push_back(std::move(row));
            table.admissible.push_back(false);
            continue;
        }
        const Metric metric(x);
        const CurvatureReport r = functionals(complex, metric);
        auto spectrum = [&](Functional which) {
            return eig_sym(length_hessian(complex, metric, which));
        };
        for (const auto& q : quantities) {
            if (q == "ehr") row.push_back(r.ehr);
            else if (q == "lehr") row.push_back(r.lehr);
            else if (q == "vehr") row.push_back(r.vehr);
            else if (q == "volume") row.push_back(r.volume);
            else if (q == "total_length") row.push_back(r.total_length);
            else if (q == "csc_l")
                row.push_back(csc_residual(r, Normalization::Length).cwiseAbs().maxCoeff());
            else if (q == "csc_v")
                row.push_back(csc_residual(r, Normalization::Volume).cwiseAbs().maxCoeff());
            else if (q == "einstein_l")
                row.push_back(
                    einstein_residual(r, metric, Normalization::Length).cwiseAbs().maxCoeff());
            else if (q == "einstein_v")
                row.push_back(
                    einstein_residual(r, metric, Normalization::Volume).cwiseAbs().maxCoeff());
            else if (q == "lambda_v_lehr" || q == "lambda_v_vehr") {
                if (n_edges != 6) {
                    row.push_back(kNaN);
                    continue;
                }
                const auto which = q == "lambda_v_lehr" ? Functional::LEHR : Functional::VEHR;
                row.push_back(tracked_value(spectrum(which), signature_vector()));
            } else if (q == "eig_lehr" || q == "eig_vehr") {
                const bool lehr = q == "eig_lehr";
                const Eigen::VectorXd values =
                    (lehr ? track_lehr : track_vehr)
                        .update(spectrum(lehr ? Functional::LEHR : Functional::VEHR));
                row.insert(row.end(), values.data(), values.data() + values.size());
            } else if (q == "conf_lambda2") {
                double value = kNaN;
                if (complex.vertex_count() == 4) {
                    try {
                        Eigen::VectorXd ref(4);
                        ref << 1, 1, -1, -1;
                        value = tracked_value(eig_sym(lehr_conformal_hessian_csc(complex, metric)),
                                              ref);
                    } catch (const PreconditionError&) {
                    }
                }
                row.push_back(value);
                row.push_back(4.0 * value);
            }
        }
        table.rows.push_back(std::move(row));
        table.admissible.push_back(true);
    }
    return table;
}

std::string to_delimited(const SweepTable& table, char delimiter) {
    std::string out;
    const std::string sep(1, delimiter);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += sep;
        out += table.columns[c];
    }
    out += sep + "admissible\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t c = 0; c < table.rows[i].size(); ++c) {
            if (c) out += sep;
            const double v = table.rows[i][c];
            out += std::isnan(v) ? std::string("nan") : fmt::format("{:.12g}", v);
        }
        out += sep + (table.admissible[i] ? "1" : "0") + "\n";
    }
    return out;
}

} // namespace regge
