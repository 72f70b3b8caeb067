#ifndef LOWPROB_COMPAT_HPP
#define LOWPROB_COMPAT_HPP

#include <span>
#include <variant>
#include <vector>

#include "lowprob/dempster.hpp"
#include "lowprob/evidence.hpp"
#include "lowprob/lp.hpp"
#include "lowprob/set_function.hpp"

namespace lowprob {

/// Position of the point (x, y) in the flattened joint table: column-major
/// by y, so each y owns a contiguous block of |X| entries.
inline std::size_t joint_index(std::size_t x_size, std::size_t x, std::size_t y)
{
    return y * x_size + x;
}

/// Probability measure on X x Y given by its point masses.
class JointMeasure {
public:
    /// masses indexed by joint_index; nonnegative and summing to one.
    JointMeasure(FiniteSpace x_space, FiniteSpace y_space, std::vector<Rational> masses);

    const FiniteSpace& x_space() const { return x_space_; }
    const FiniteSpace& y_space() const { return y_space_; }
    std::span<const Rational> masses() const { return masses_; }
    const Rational& mass(std::size_t x, std::size_t y) const { return masses_[joint_index(x_space_.size(), x, y)]; }

    /// P(A x Y).
    Rational x_marginal(const Subset& a) const;
    /// P(X x F).
    Rational y_marginal(const Subset& f) const;
    /// P(E x {y}).
    Rational cylinder(const Subset& e, std::size_t y) const;

    ProbMeasure marginal_y() const;

private:
    FiniteSpace x_space_;
    FiniteSpace y_space_;
    std::vector<Rational> masses_;
};

/// Joint measures with Y-marginal p that vanish off the graph of the map.
struct DempsterFamily {
    ProbMeasure p;
    MultivaluedMap mapping;
};

/// Joint measures whose Y-marginal dominates the lower function and whose
/// conditionals dominate the per-y envelopes.
struct EnvelopeFamily {
    EnvelopeEvidence evidence;
};

/// Joint measures satisfying arbitrary nonstrict linear rows over the |X||Y|
/// point masses (indexed by joint_index).
class PolyhedralFamily {
public:
    PolyhedralFamily(FiniteSpace x_space, FiniteSpace y_space, std::vector<lp::Constraint> rows);

    const FiniteSpace& x_space() const { return x_space_; }
    const FiniteSpace& y_space() const { return y_space_; }
    std::span<const lp::Constraint> rows() const { return rows_; }

private:
    FiniteSpace x_space_;
    FiniteSpace y_space_;
    std::vector<lp::Constraint> rows_;
};

using FamilySpec = std::variant<DempsterFamily, EnvelopeFamily, PolyhedralFamily>;

FiniteSpace x_space_of(const FamilySpec& spec);
FiniteSpace y_space_of(const FamilySpec& spec);

/// Linear description of a family over |X||Y| nonnegative variables.
struct ConstraintBlock {
    std::size_t num_vars = 0;
    /// sum of all masses == 1
    lp::Constraint total_mass;
    /// Family-specific rows, in a fixed order:
    ///  - Dempster: one marginal equality per y, then one zero-forcing
    ///    equality per (x, y) with x outside the image of y.
    ///  - Envelope: one marginal inequality per F subset of Y, then per y
    ///    and per E subset of X the row P(E x {y}) - l_y(E) P(X x {y}) >= 0.
    ///  - Polyhedral: the rows as given.
    std::vector<lp::Constraint> rows;
};

ConstraintBlock family_constraints(const FamilySpec& spec);

struct LowerSolution {
    Rational value;
    JointMeasure witness;
};

/// min { P(A x Y) : P in the family } together with a minimizing P.
/// Throws EmptyFamily when the family has no members.
LowerSolution lower_solution(const FamilySpec& spec, const Subset& a);

Rational lower_value(const FamilySpec& spec, const Subset& a);

/// lower_value on every subset of X.
SetFunction lower_function(const FamilySpec& spec);

/// P(x, y) = conditionals[y](x) * q(y).
JointMeasure product_joint(const ProbMeasure& q, std::span<const ProbMeasure> conditionals);

/// Every row of family_constraints(spec) holds at P, exactly.
bool membership(const JointMeasure& joint, const FamilySpec& spec);

} // namespace lowprob

#endif
