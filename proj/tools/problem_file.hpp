#ifndef LOWPROB_TOOLS_PROBLEM_FILE_HPP
#define LOWPROB_TOOLS_PROBLEM_FILE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lowprob/dempster.hpp"
#include "lowprob/lp.hpp"
#include "lowprob/set_function.hpp"

namespace lowprob::cli {

/**
 * Parsed problem file.
 *
 * Every field is optional at parse time; subcommands ask for the fields they
 * need through the require_* accessors, which raise InvalidInput naming the
 * missing field. Layout:
 *
 *     {
 *       "X": ["x1", "x2"],
 *       "Y": ["y1", "y2"],
 *       "p": {"y1": "1/2", "y2": "1/2"},
 *       "gamma": {"y1": ["x1"], "y2": ["x1", "x2"]},
 *       "ell": {"": "0", "y1": "1/4", "y2": "1/2", "y1,y2": "1"},
 *       "lambda_y": {"y1": {"": "0", "x1": "1", ...}, "y2": {...}},
 *       "constraints": [{"terms": {"x1|y1": "1"}, "relation": ">=", "rhs": "1/2"}],
 *       "queries": ["x1", "x1,x2"]
 *     }
 *
 * Rationals are JSON strings ("a/b" or an integer). Set-function tables
 * ("ell" and each "lambda_y" entry) must list every subset exactly once.
 * "p" and "ell" live on Y; "lambda_y" entries live on X.
 */
struct ProblemFile {
    std::optional<FiniteSpace> x;
    std::optional<FiniteSpace> y;
    std::optional<ProbMeasure> p;
    std::optional<MultivaluedMap> gamma;
    std::optional<SetFunction> ell;
    std::optional<std::vector<SetFunction>> lambda_y;
    std::optional<std::vector<lp::Constraint>> constraints;
    std::vector<std::string> queries;

    const FiniteSpace& require_x() const;
    const FiniteSpace& require_y() const;
    const ProbMeasure& require_p() const;
    const MultivaluedMap& require_gamma() const;
    const SetFunction& require_ell() const;
    const std::vector<SetFunction>& require_lambda_y() const;
    const std::vector<lp::Constraint>& require_constraints() const;
};

ProblemFile parse_problem(const nlohmann::json& doc);

/// Reads and parses a problem file; IO and JSON syntax errors become
/// InvalidInput.
ProblemFile load_problem(const std::filesystem::path& path);

/// Parses a table keyed by subset names into a total set function.
SetFunction parse_set_function(const FiniteSpace& space, const nlohmann::json& table, const std::string& field);

} // namespace lowprob::cli

#endif
