#ifndef LOWPROB_SET_FUNCTION_HPP
#define LOWPROB_SET_FUNCTION_HPP

#include <span>
#include <vector>

#include "lowprob/rational.hpp"
#include "lowprob/space.hpp"

namespace lowprob {

class ProbMeasure;

/**
 * Total set function 2^space -> Rational, stored densely and indexed by mask.
 *
 * Used for lower and upper probabilities, belief functions and mass
 * (Möbius) tables alike.
 */
class SetFunction {
public:
    /// The zero function.
    explicit SetFunction(FiniteSpace space);

    /// Throws InvalidInput unless values.size() == 2^space.size().
    SetFunction(FiniteSpace space, std::vector<Rational> values);

    /// 1 on the full set, 0 elsewhere.
    static SetFunction vacuous(FiniteSpace space);

    /// The additive set function A -> p(A).
    static SetFunction of_measure(const ProbMeasure& p);

    const FiniteSpace& space() const { return space_; }
    std::span<const Rational> values() const { return values_; }

    const Rational& operator[](Mask mask) const { return values_[mask]; }
    const Rational& operator()(const Subset& subset) const;

    /// Returns a copy with one entry replaced.
    SetFunction with_value(Mask mask, Rational value) const;

    /// value(empty) == 0 and value(full) == 1.
    bool is_normalized() const;

    friend bool operator==(const SetFunction& lhs, const SetFunction& rhs)
    {
        return lhs.space_ == rhs.space_ && lhs.values_ == rhs.values_;
    }

private:
    FiniteSpace space_;
    std::vector<Rational> values_;
};

/// Probability measure on a finite space: nonnegative point masses summing
/// to exactly one.
class ProbMeasure {
public:
    /// Validating constructor; see validate_measure.
    ProbMeasure(FiniteSpace space, std::vector<Rational> point_mass);

    static ProbMeasure uniform(FiniteSpace space);
    static ProbMeasure point(FiniteSpace space, std::size_t index);

    const FiniteSpace& space() const { return space_; }
    std::span<const Rational> point_masses() const { return point_mass_; }
    const Rational& operator[](std::size_t index) const { return point_mass_[index]; }

    friend bool operator==(const ProbMeasure& lhs, const ProbMeasure& rhs)
    {
        return lhs.space_ == rhs.space_ && lhs.point_mass_ == rhs.point_mass_;
    }

private:
    FiniteSpace space_;
    std::vector<Rational> point_mass_;
};

/// Checks masses >= 0 and sum == 1 exactly. The InvalidInput message names
/// the offending value (the negative mass, or the actual sum).
ProbMeasure validate_measure(FiniteSpace space, std::vector<Rational> point_mass);

/// p(A), summed over the elements of A.
Rational measure_of(const ProbMeasure& p, const Subset& subset);

/// u(A) = 1 - l(complement of A). Requires a normalized input.
SetFunction upper_from_lower(const SetFunction& lower);

/// Möbius inverse: m(A) = sum over B subset of A of (-1)^|A\B| f(B).
SetFunction mobius(const SetFunction& f);

/// Zeta transform, the inverse of mobius: f(A) = sum over B subset of A of m(B).
SetFunction from_mass(const SetFunction& mass);

} // namespace lowprob

#endif
