#include <string>

#include "lowprob/error.hpp"
#include "lowprob/lp.hpp"

namespace lowprob::lp {

std::string_view to_string(Relation relation)
{
    switch (relation) {
    case Relation::LessEqual:
        return "<=";
    case Relation::Equal:
        return "=";
    case Relation::GreaterEqual:
        return ">=";
    }
    return "?";
}

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::Optimal:
        return "optimal";
    case Status::Infeasible:
        return "infeasible";
    case Status::Unbounded:
        return "unbounded";
    }
    return "?";
}

Rational Constraint::lhs_at(const std::vector<Rational>& point) const
{
    Rational total;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (!coefficients[i].is_zero()) {
            total += coefficients[i] * point[i];
        }
    }
    return total;
}

bool Constraint::satisfied_by(const std::vector<Rational>& point) const
{
    const Rational lhs = lhs_at(point);
    switch (relation) {
    case Relation::LessEqual:
        return lhs <= rhs;
    case Relation::Equal:
        return lhs == rhs;
    case Relation::GreaterEqual:
        return lhs >= rhs;
    }
    return false;
}

void LinearProgram::validate() const
{
    if (num_vars == 0) {
        throw InvalidInput("linear program needs at least one variable");
    }
    if (objective.size() != num_vars) {
        throw InvalidInput("objective has " + std::to_string(objective.size()) + " coefficients, expected " +
                           std::to_string(num_vars));
    }
    for (std::size_t r = 0; r < constraints.size(); ++r) {
        if (constraints[r].coefficients.size() != num_vars) {
            throw InvalidInput("constraint row " + std::to_string(r) + " has " +
                               std::to_string(constraints[r].coefficients.size()) + " coefficients, expected " +
                               std::to_string(num_vars));
        }
    }
}

bool LinearProgram::is_feasible(const std::vector<Rational>& point) const
{
    if (point.size() != num_vars) {
        return false;
    }
    if (nonneg) {
        for (const auto& v : point) {
            if (v < 0) {
                return false;
            }
        }
    }
    for (const auto& row : constraints) {
        if (!row.satisfied_by(point)) {
            return false;
        }
    }
    return true;
}

Rational LinearProgram::objective_at(const std::vector<Rational>& point) const
{
    Rational total;
    for (std::size_t i = 0; i < num_vars; ++i) {
        total += objective[i] * point[i];
    }
    return total;
}

} // namespace lowprob::lp
