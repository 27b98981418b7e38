#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "regge/curvature.hpp"
#include "regge/solve.hpp"

namespace regge {

enum class OutputFormat { Human, Structured, Delimited };

OutputFormat parse_output_format(std::string_view name);

/// Nested key/value document. Structured output prints every number with 12
/// significant digits and human output 8; delimited
/// output flattens keys to dotted paths, one `key,value` line each.
class Document {
public:
    explicit Document(OutputFormat format) : format_(format) {}

    Document& begin(std::string_view key);
    Document& end();

    Document& value(std::string_view key, double v);
    Document& value(std::string_view key, int v);
    Document& value(std::string_view key, bool v);
    Document& value(std::string_view key, std::string_view v);
    Document& value(std::string_view key, const char* v) { return value(key, std::string_view(v)); }
    Document& vector(std::string_view key, const Eigen::VectorXd& v);
    Document& matrix(std::string_view key, const Eigen::MatrixXd& m);

    OutputFormat format() const noexcept { return format_; }
    const std::string& str() const noexcept { return out_; }

private:
    std::string number(double v) const;
    void line(std::string_view key, const std::string& text);

    OutputFormat format_;
    std::vector<std::string> path_;
    std::string out_;
};

void write_report(Document& doc, const Metric& metric, const CurvatureReport& report);
void write_residuals(Document& doc, const Metric& metric, const CurvatureReport& report);
void write_bounds(Document& doc, const BoundsReport& bounds);
void write_spectrum(Document& doc, const Spectrum& spectrum, bool vectors = true);
void write_trace(Document& doc, const SolveTrace& trace, bool iterates = false);
void write_yamabe(Document& doc, const YamabeEstimate& estimate);

} // namespace regge
