#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "regge/complex.hpp"
#include "regge/conformal.hpp"
#include "regge/curvature.hpp"
#include "regge/error.hpp"
#include "regge/geometry.hpp"
#include "regge/report.hpp"
#include "regge/reproduce.hpp"
#include "regge/solve.hpp"

namespace regge::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

double parse_number(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return v;
}

Complex select_complex(const std::string& selector) {
    if (selector == "dt") return double_tetrahedron();
    if (selector == "cell600") return six_hundred_cell();
    if (selector == "pentachoron") return pentachoron_boundary();
    try {
        return load_complex_file(selector);
    } catch (const std::exception& e) {
        throw UsageError("cannot load complex '" + selector + "': " + e.what());
    }
}

/// `uniform:k` or a comma-separated list of `count` numbers.
Eigen::VectorXd parse_vector(const std::string& text, int count, const char* what) {
    if (text.rfind("uniform:", 0) == 0)
        return Eigen::VectorXd::Constant(count, parse_number(text.substr(8)));
    const auto items = split(text, ',');
    if (static_cast<int>(items.size()) != count)
        throw UsageError(fmt::format("{} needs {} values, got {}", what, count, items.size()));
    Eigen::VectorXd v(count);
    for (int i = 0; i < count; ++i) v[i] = parse_number(items[i]);
    return v;
}

int exit_for(Termination t) {
    switch (t) {
    case Termination::Converged: return kOk;
    case Termination::BoundaryHit: return kBoundaryHit;
    case Termination::MaxIters:
    case Termination::Stalled: return kMaxIters;
    }
    return kMaxIters;
}

void write_complex(Document& doc, const Complex& c) {
    doc.begin("complex");
    doc.value("vertices", c.vertex_count()).value("edges", c.edge_count());
    doc.value("faces", c.face_count()).value("tets", c.tet_count());
    doc.value("max_edge_degree", max_edge_degree(c));
    doc.end();
}

double max_abs_csc(const Complex& c, const Metric& m) {
    return csc_residual(c, m, Normalization::Length).cwiseAbs().maxCoeff();
}

bool equal_length_dt(const Complex& c, const Eigen::VectorXd& l) {
    if (c.vertex_count() != 4 || c.edge_count() != 6 || c.tet_count() != 2) return false;
    return (l.array() - l[0]).abs().maxCoeff() <= 1e-12 * l[0];
}

struct Options {
    std::string complex = "dt";
    std::string format = "human";
    std::string lengths;
    std::string cls;
    std::string conformal;
    std::string functional = "lehr";
    std::string space = "lengths";
    std::string chart = "log";
    std::string which = "L";
    std::string family = "diag";
    std::string range = "1:1.41:100";
    std::string quantities = "ehr,lehr,vehr";
    std::vector<std::string> only;
    bool all = false;
    bool trace = false;
    bool no_vectors = false;
    double tolerance = 0.0;
    int max_iters = 0;
    int starts = 16;
    std::uint64_t seed = 1;
    double spread = 1.0;
};

int cmd_analyze(const Options& o, std::ostream& out) {
    const Complex c = select_complex(o.complex);
    const Metric m(parse_vector(o.lengths, c.edge_count(), "--lengths"));
    const CurvatureReport r = functionals(c, m);
    Document doc(parse_output_format(o.format));
    write_complex(doc, c);
    write_report(doc, m, r);
    write_bounds(doc, bounds_report(c, m));
    write_residuals(doc, m, r);
    out << doc.str();
    return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const Complex c = select_complex(o.complex);
    const Functional which = parse_functional(o.functional);
    if (o.chart != "log" && o.chart != "factor") throw UsageError("--chart is log or factor");
    Document doc(parse_output_format(o.format));
    SymMatrix h;
    Eigen::VectorXd lengths;
    std::string method;
    const bool conformal = o.space == "conformal";
    if (o.space == "lengths") {
        if (o.lengths.empty()) throw UsageError("--space lengths needs --lengths");
        lengths = parse_vector(o.lengths, c.edge_count(), "--lengths");
        h = length_hessian(c, Metric(lengths), which);
        method = "central differences of the analytic gradient";
    } else if (conformal) {
        if (o.cls.empty()) throw UsageError("--space conformal needs --class");
        const ConformalClass cls(c, Metric(parse_vector(o.cls, c.edge_count(), "--class")));
        const ConformalPoint f = o.conformal.empty()
                                     ? ConformalPoint::Zero(c.vertex_count())
                                     : parse_vector(o.conformal, c.vertex_count(), "--conformal");
        const Metric m = cls.metric_at(f);
        lengths = m.lengths();
        const double residual = max_abs_csc(c, m);
        if (which == Functional::LEHR && residual <= kCscHessianTolerance) {
            h = lehr_conformal_hessian_csc(c, m);
            method = "closed form at a csc metric";
        } else {
            h = conformal_hessian(cls, f, which);
            method = "central differences of the analytic gradient";
        }
        if (o.chart == "log") h = to_log_scale_chart(h);
    } else {
        throw UsageError("--space is lengths or conformal");
    }

    const Spectrum s = eig_sym(h);
    doc.value("functional", to_string(which)).value("space", o.space).value("method", method);
    if (conformal)
        doc.value("chart", o.chart == "log" ? "log-scale u = f/2" : "conformal factor f");
    write_spectrum(doc, s, !o.no_vectors);

    if (equal_length_dt(c, lengths) && which != Functional::EHR) {
        const double k = lengths[0];
        const double pi = std::numbers::pi;
        const double acos3 = std::acos(1.0 / 3.0);
        Eigen::VectorXd expected;
        if (!conformal && which == Functional::LEHR) {
            const double a = 2.0 * std::sqrt(2.0) / 9.0, b = -2.0 * std::sqrt(2.0) / 3.0;
            expected.resize(6);
            expected << b, b, 0, a, a, a;
            expected /= k * k;
        } else if (!conformal) {
            const double a = std::pow(2.0, 7.0 / 6.0) * std::pow(3.0, -2.0 / 3.0) *
                             (std::pow(2.0, 1.5) + 9.0 * pi - 9.0 * acos3);
            const double b = std::pow(2.0, 7.0 / 6.0) * std::cbrt(3.0) *
                             (7.0 * pi - std::pow(2.0, 1.5) - 7.0 * acos3);
            expected.resize(6);
            expected << 0, a, a, a, b, b;
            expected /= k * k;
        } else if (which == Functional::LEHR) {
            const double a = (o.chart == "log" ? 4.0 : 1.0) * std::sqrt(2.0) / 9.0;
            expected.resize(4);
            expected << 0, a, a, a;
        }
        if (expected.size() == s.values.size()) {
            doc.begin("reference");
            doc.value("label", "closed forms at the equal-length double tetrahedron");
            doc.vector("expected", expected);
            doc.value("max_abs_difference", (expected - s.values).cwiseAbs().maxCoeff());
            doc.end();
        }
    }
    out << doc.str();
    return kOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    std::vector<std::string> ids;
    for (const auto& item : o.only)
        for (const auto& id : split(item, ',')) ids.push_back(id);
    if (ids.empty() || o.all) ids = criterion_ids();
    std::vector<CriterionResult> results;
    for (const auto& id : ids) {
        try {
            results.push_back(run_criterion(id));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    out << format_criteria(results, parse_output_format(o.format));
    const bool ok = std::all_of(results.begin(), results.end(),
                                [](const CriterionResult& r) { return r.pass(); });
    return ok ? kOk : kCriteriaFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const Complex c = select_complex(o.complex);
    if (o.family != "diag") throw UsageError("unknown family '" + o.family + "'");
    if (c.edge_count() != 6) throw UsageError("family diag needs the double tetrahedron");
    const auto parts = split(o.range, ':');
    if (parts.size() != 3) throw UsageError("--t expects a:b:n");
    const int n = static_cast<int>(parse_number(parts[2]));
    if (n < 1) throw UsageError("--t needs at least one sample");
    SweepTable table;
    try {
        table = sweep_family(c, diag_family, linspace(parse_number(parts[0]), parse_number(parts[1]), n),
                             split(o.quantities, ','));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const OutputFormat format = parse_output_format(o.format);
    if (format == OutputFormat::Structured) {
        Document doc(format);
        doc.begin("sweep");
        std::string cols;
        for (const auto& col : table.columns) cols += (cols.empty() ? "" : ",") + col;
        doc.value("columns", cols);
        doc.begin("rows");
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            doc.vector(std::to_string(i), Eigen::Map<const Eigen::VectorXd>(
                                              table.rows[i].data(),
                                              static_cast<Eigen::Index>(table.rows[i].size())));
        doc.end().end();
        out << doc.str();
    } else {
        out << to_delimited(table, format == OutputFormat::Delimited ? ',' : '\t');
    }
    return kOk;
}

int cmd_find_csc(const Options& o, std::ostream& out) {
    const Complex c = select_complex(o.complex);
    if (o.cls.empty()) throw UsageError("find-csc needs --class");
    const ConformalClass cls(c, Metric(parse_vector(o.cls, c.edge_count(), "--class")));
    const Normalization which = parse_normalization(o.which);
    const ConformalPoint f0 = o.conformal.empty()
                                  ? ConformalPoint::Zero(c.vertex_count())
                                  : parse_vector(o.conformal, c.vertex_count(), "--start");
    CscOptions opts;
    if (o.tolerance > 0) opts.tolerance = o.tolerance;
    if (o.max_iters > 0) opts.max_iterations = o.max_iters;
    const CscResult res = solve_csc(cls, which, f0, opts);
    const Metric m = cls.metric_at(res.f);
    const CurvatureReport r = functionals(c, m);
    Document doc(parse_output_format(o.format));
    doc.begin("csc");
    doc.value("normalization", to_string(which));
    doc.vector("f", res.f);
    doc.vector("f_aligned", align_gauge(res.f, c.vertex_count() - 1));
    doc.vector("lengths", m.lengths());
    doc.value("lambda", which == Normalization::Length ? r.lehr : r.lambda_volume);
    doc.value("lehr", r.lehr).value("vehr", r.vehr);
    doc.value("residual", csc_residual(r, which).cwiseAbs().maxCoeff());
    doc.end();
    write_trace(doc, res.trace, o.trace);
    out << doc.str();
    return exit_for(res.trace.termination);
}

int cmd_find_einstein(const Options& o, std::ostream& out) {
    const Complex c = select_complex(o.complex);
    const Functional fn = parse_functional(o.functional);
    if (fn == Functional::EHR) throw UsageError("find-einstein needs lehr or vehr");
    const Eigen::VectorXd x0 = parse_vector(o.lengths, c.edge_count(), "--lengths");
    check_admissible(c, x0);
    DescentOptions opts;
    if (o.tolerance > 0) opts.gradient_tolerance = o.tolerance;
    if (o.max_iters > 0) opts.max_iterations = o.max_iters;
    const DescentResult res = descend(length_objective(c, fn), x0, opts);
    const Metric m(res.x);
    const CurvatureReport r = functionals(c, m);
    const Normalization norm = fn == Functional::LEHR ? Normalization::Length : Normalization::Volume;
    Document doc(parse_output_format(o.format));
    doc.begin("einstein");
    doc.value("functional", to_string(fn));
    doc.vector("lengths", m.lengths());
    doc.value("value", res.value);
    doc.value("residual", einstein_residual(r, m, norm).cwiseAbs().maxCoeff());
    doc.value("admissibility_margin", admissibility_margin(c, m.lengths()));
    doc.end();
    write_trace(doc, res.trace, o.trace);
    out << doc.str();
    return exit_for(res.trace.termination);
}

int cmd_yamabe(const Options& o, std::ostream& out) {
    const Complex c = select_complex(o.complex);
    if (o.cls.empty()) throw UsageError("yamabe needs --class");
    const ConformalClass cls(c, Metric(parse_vector(o.cls, c.edge_count(), "--class")));
    YamabeOptions opts;
    opts.starts = o.starts;
    opts.seed = o.seed;
    opts.spread = o.spread;
    if (o.max_iters > 0) opts.descent.max_iterations = o.max_iters;
    const YamabeEstimate est = yamabe_constant_estimate(cls, parse_normalization(o.which), opts);
    Document doc(parse_output_format(o.format));
    write_yamabe(doc, est);
    out << doc.str();
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regge curvature functionals on triangulated 3-manifolds", "regge"};
    app.require_subcommand(1);
    Options o;
    auto formats = CLI::IsMember({"human", "structured", "delimited"});
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--complex", o.complex, "dt, cell600, pentachoron or a complex file")
            ->capture_default_str();
        sub->add_option("--format", o.format, "human, structured or delimited")
            ->check(formats)
            ->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "curvature report, bounds and residuals");
    add_common(analyze);
    analyze->add_option("--lengths", o.lengths, "comma list or uniform:k")->required();

    auto* spectrum = app.add_subcommand("spectrum", "Hessian eigenvalues and eigenvectors");
    add_common(spectrum);
    spectrum->add_option("--functional", o.functional, "ehr, lehr or vehr")->capture_default_str();
    spectrum->add_option("--space", o.space, "lengths or conformal")->capture_default_str();
    spectrum->add_option("--lengths", o.lengths, "metric for --space lengths");
    spectrum->add_option("--class", o.cls, "background lengths for --space conformal");
    spectrum->add_option("--conformal", o.conformal, "conformal factors (default 0)");
    spectrum->add_option("--chart", o.chart, "log (u = f/2) or factor (f)")->capture_default_str();
    spectrum->add_flag("--no-vectors", o.no_vectors, "omit eigenvectors");

    auto* reproduce = app.add_subcommand("reproduce", "run the acceptance criteria");
    reproduce->add_option("--format", o.format)->check(formats)->capture_default_str();
    reproduce->add_flag("--all", o.all, "every criterion (default)");
    reproduce->add_option("--only", o.only, "criterion ids");

    auto* sweep = app.add_subcommand("sweep", "tabulate quantities along a family");
    add_common(sweep);
    sweep->add_option("--family", o.family, "diag: (t,1,1,1,1,t)")->capture_default_str();
    sweep->add_option("--t", o.range, "a:b:n")->capture_default_str();
    sweep->add_option("--quantities", o.quantities, "comma list")->capture_default_str();

    auto* find_csc = app.add_subcommand("find-csc", "Newton solve for a csc metric in a class");
    add_common(find_csc);
    find_csc->add_option("--class", o.cls, "background lengths")->required();
    find_csc->add_option("--which", o.which, "L or V")->capture_default_str();
    find_csc->add_option("--start", o.conformal, "initial conformal factors (default 0)");
    find_csc->add_option("--tol", o.tolerance, "residual tolerance")->check(CLI::PositiveNumber);
    find_csc->add_option("--max-iters", o.max_iters)->check(CLI::PositiveNumber);
    find_csc->add_flag("--trace", o.trace, "include iterates");

    auto* find_einstein = app.add_subcommand("find-einstein", "descent for an Einstein metric");
    add_common(find_einstein);
    find_einstein->add_option("--functional", o.functional, "lehr or vehr")->capture_default_str();
    find_einstein->add_option("--lengths", o.lengths, "starting metric")->required();
    find_einstein->add_option("--tol", o.tolerance, "gradient tolerance")->check(CLI::PositiveNumber);
    find_einstein->add_option("--max-iters", o.max_iters)->check(CLI::PositiveNumber);
    find_einstein->add_flag("--trace", o.trace, "include iterates");

    auto* yamabe = app.add_subcommand("yamabe", "multi-start Yamabe constant estimate");
    add_common(yamabe);
    yamabe->add_option("--class", o.cls, "background lengths")->required();
    yamabe->add_option("--which", o.which, "L or V")->capture_default_str();
    yamabe->add_option("--starts", o.starts)->check(CLI::PositiveNumber)->capture_default_str();
    yamabe->add_option("--seed", o.seed)->capture_default_str();
    yamabe->add_option("--spread", o.spread, "random starts in [-s, s]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    yamabe->add_option("--max-iters", o.max_iters)->check(CLI::PositiveNumber);

    std::vector<std::string> storage{"regge"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (spectrum->parsed()) return cmd_spectrum(o, out);
        if (reproduce->parsed()) return cmd_reproduce(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out);
        if (find_csc->parsed()) return cmd_find_csc(o, out);
        if (find_einstein->parsed()) return cmd_find_einstein(o, out);
        if (yamabe->parsed()) return cmd_yamabe(o, out);
    } catch (const DomainError& e) {
        err << "error: inadmissible metric: " << e.what() << "\n";
        Document doc(parse_output_format(o.format));
        doc.begin("inadmissible");
        doc.value("tet", e.tet());
        doc.value("cm3", e.cayley_menger());
        doc.end();
        out << doc.str();
        return kInadmissible;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace regge::cli
