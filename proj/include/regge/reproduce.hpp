#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regge/report.hpp"

namespace regge {

/// How a check compares `actual` with `expected`.
enum class Relation {
    Near,     // |actual - expected| <= tolerance
    AtMost,   // actual <= expected + tolerance
    AtLeast,  // actual >= expected - tolerance
    Holds,    // actual == 1 (a counted or boolean property)
};

struct Check {
    std::string name;
    Relation relation = Relation::Near;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CriterionResult {
    int number = 0;
    std::string id;
    std::string title;
    std::vector<Check> checks;
    std::string error;  // set when the criterion threw

    bool pass() const;
};

/// Ids in criterion order: hess_lehr, hess_vehr, tstar, conf_hess, csc,
/// unbounded, einstein_csc, properties, uniqueness, cell600, yamabe.
const std::vector<std::string>& criterion_ids();

/// Runs one criterion; throws std::invalid_argument for unknown ids.
CriterionResult run_criterion(std::string_view id);

std::string_view to_string(Relation r);

/// One row per check (criterion, check, relation, expected, actual,
/// tolerance, status) and one summary line per criterion.
std::string format_criteria(const std::vector<CriterionResult>& results, OutputFormat format);

} // namespace regge
