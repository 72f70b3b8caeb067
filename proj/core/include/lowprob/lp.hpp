#ifndef LOWPROB_LP_HPP
#define LOWPROB_LP_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "lowprob/rational.hpp"

namespace lowprob::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

std::string_view to_string(Relation relation);

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;

    /// coefficients . point, exactly.
    Rational lhs_at(const std::vector<Rational>& point) const;
    bool satisfied_by(const std::vector<Rational>& point) const;
};

/// Minimize objective . x subject to the constraints (and x >= 0 when
/// nonneg is set).
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    bool nonneg = true;

    /// Throws InvalidInput if num_vars == 0 or any row is mis-dimensioned.
    void validate() const;

    /// Every constraint holds at point, plus nonnegativity if requested.
    bool is_feasible(const std::vector<Rational>& point) const;

    Rational objective_at(const std::vector<Rational>& point) const;
};

enum class Status { Optimal, Infeasible, Unbounded };

std::string_view to_string(Status status);

struct Outcome {
    Status status = Status::Infeasible;
    Rational value;                // meaningful when optimal
    std::vector<Rational> witness; // meaningful when optimal
};

/**
 * Exact two-phase tableau simplex.
 *
 * Free variables are split into a difference of nonnegative parts, rows are
 * sign-normalized so right-hand sides are nonnegative, and phase one
 * minimizes the sum of artificial variables. Entering and leaving variables
 * follow Bland's smallest-index rule, so the method terminates on degenerate
 * programs. Deterministic for a given input.
 */
Outcome solve_min(const LinearProgram& program);

/// Size limits accepted by oracle_min.
inline constexpr std::size_t kOracleMaxVars = 8;
inline constexpr std::size_t kOracleMaxConstraints = 40;

/**
 * Brute-force verification oracle.
 *
 * Enumerates every basic point (the unique solution of all equality rows plus
 * a choice of tight inequality or bound rows), keeps the feasible ones and
 * returns the least objective value among them. Unboundedness is detected by
 * the same enumeration over the normalized recession cone. Shares no code
 * with solve_min.
 *
 * Throws UnsupportedSize beyond kOracleMaxVars / kOracleMaxConstraints.
 */
Outcome oracle_min(const LinearProgram& program);

} // namespace lowprob::lp

#endif
