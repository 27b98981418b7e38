#include "regge/report.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace regge {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "human") return OutputFormat::Human;
    if (name == "structured") return OutputFormat::Structured;
    if (name == "delimited") return OutputFormat::Delimited;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string Document::number(double v) const {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    return format_ == OutputFormat::Human ? fmt::format("{:.8g}", v) : fmt::format("{:.12g}", v);
}

void Document::line(std::string_view key, const std::string& text) {
    if (format_ == OutputFormat::Delimited) {
        for (const auto& p : path_) out_ += p + ".";
        out_ += fmt::format("{},{}\n", key, text);
        return;
    }
    out_ += std::string(2 * path_.size(), ' ');
    out_ += fmt::format("{}: {}\n", key, text);
}

Document& Document::begin(std::string_view key) {
    if (format_ != OutputFormat::Delimited)
        out_ += std::string(2 * path_.size(), ' ') + std::string(key) + ":\n";
    path_.emplace_back(key);
    return *this;
}

Document& Document::end() {
    if (!path_.empty()) path_.pop_back();
    return *this;
}

Document& Document::value(std::string_view key, double v) {
    line(key, number(v));
    return *this;
}

Document& Document::value(std::string_view key, int v) {
    line(key, std::to_string(v));
    return *this;
}

Document& Document::value(std::string_view key, bool v) {
    line(key, v ? "true" : "false");
    return *this;
}

Document& Document::value(std::string_view key, std::string_view v) {
    line(key, std::string(v));
    return *this;
}

Document& Document::vector(std::string_view key, const Eigen::VectorXd& v) {
    std::string text = format_ == OutputFormat::Delimited ? "" : "[";
    const char* sep = format_ == OutputFormat::Delimited ? ";" : ", ";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) text += sep;
        text += number(v[i]);
    }
    if (format_ != OutputFormat::Delimited) text += "]";
    line(key, text);
    return *this;
}

Document& Document::matrix(std::string_view key, const Eigen::MatrixXd& m) {
    begin(key);
    for (Eigen::Index i = 0; i < m.rows(); ++i) vector(std::to_string(i), m.row(i).transpose());
    return end();
}

void write_report(Document& doc, const Metric& metric, const CurvatureReport& r) {
    doc.begin("curvature");
    doc.vector("lengths", metric.lengths());
    doc.value("ehr", r.ehr).value("lehr", r.lehr).value("vehr", r.vehr);
    doc.value("total_length", r.total_length).value("volume", r.volume);
    doc.value("lambda_volume", r.lambda_volume);
    doc.vector("edge_curvature", r.edge_curvature);
    doc.vector("edge_volume", r.edge_volume);
    doc.vector("dual_length", r.dual_length);
    doc.vector("vertex_curvature", r.vertex_curvature);
    doc.vector("vertex_length", r.vertex_length);
    doc.vector("vertex_volume", r.vertex_volume);
    doc.end();
}

void write_residuals(Document& doc, const Metric& metric, const CurvatureReport& r) {
    doc.begin("residuals");
    for (auto which : {Normalization::Length, Normalization::Volume}) {
        const Eigen::VectorXd e = einstein_residual(r, metric, which);
        const Eigen::VectorXd c = csc_residual(r, which);
        const std::string suffix = which == Normalization::Length ? "l" : "v";
        doc.value("einstein_" + suffix + "_max", e.cwiseAbs().maxCoeff());
        doc.vector("einstein_" + suffix, e);
        doc.value("csc_" + suffix + "_max", c.cwiseAbs().maxCoeff());
        doc.vector("csc_" + suffix, c);
    }
    doc.end();
}

void write_bounds(Document& doc, const BoundsReport& b) {
    doc.begin("bounds");
    doc.value("max_edge_degree", b.max_edge_degree);
    doc.value("lehr", b.lehr).value("lehr_lower", b.lehr_lower).value("lehr_upper", b.lehr_upper);
    doc.value("lehr_ok", b.lehr_ok);
    doc.value("fatness", b.fatness);
    doc.value("vehr", b.vehr).value("vehr_lower", b.vehr_lower).value("vehr_ok", b.vehr_ok);
    doc.end();
}

void write_spectrum(Document& doc, const Spectrum& s, bool vectors) {
    doc.begin("spectrum");
    doc.vector("eigenvalues", s.values);
    if (vectors) doc.matrix("eigenvectors", s.vectors.transpose());
    doc.end();
}

void write_trace(Document& doc, const SolveTrace& t, bool iterates) {
    doc.begin("trace");
    doc.value("termination", to_string(t.termination));
    doc.value("iterations", t.iterations());
    if (t.seed) doc.value("seed", std::to_string(*t.seed));
    doc.vector("residuals", Eigen::Map<const Eigen::VectorXd>(t.residuals.data(),
                                                                static_cast<Eigen::Index>(t.residuals.size())));
    doc.vector("steps", Eigen::Map<const Eigen::VectorXd>(t.steps.data(),
                                                            static_cast<Eigen::Index>(t.steps.size())));
    if (iterates) {
        doc.begin("iterates");
        for (std::size_t i = 0; i < t.iterates.size(); ++i)
            doc.vector(std::to_string(i), t.iterates[i]);
        doc.end();
    }
    doc.end();
}

void write_yamabe(Document& doc, const YamabeEstimate& y) {
    doc.begin("yamabe");
    doc.value("value", y.value);
    doc.value("bound", "upper bound on the infimum over the class");
    doc.vector("point", y.point);
    doc.value("best_termination", to_string(y.best_termination));
    doc.value("attained_interior", y.attained_interior);
    doc.value("boundary_approach", y.boundary_approach);
    doc.value("runs", y.runs).value("converged", y.converged).value("boundary_hits", y.boundary_hits);
    doc.value("seed", std::to_string(y.seed));
    doc.vector("run_values", Eigen::Map<const Eigen::VectorXd>(
                                 y.run_values.data(), static_cast<Eigen::Index>(y.run_values.size())));
    doc.end();
}

} // namespace regge
