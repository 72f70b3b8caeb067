#ifndef LOWPROB_ENVELOPE_HPP
#define LOWPROB_ENVELOPE_HPP

#include <optional>
#include <span>
#include <utility>

#include "lowprob/lp.hpp"
#include "lowprob/set_function.hpp"

namespace lowprob {

struct LowerProbabilityCheck {
    bool holds = true;
    /// Disjoint pair (A, B) where superadditivity of the lower function or
    /// subadditivity of its upper dual fails.
    std::optional<std::pair<Mask, Mask>> witness;
    /// True when the failure is on the upper side.
    bool upper_side = false;
};

/// l(A u B) >= l(A) + l(B) and u(A u B) <= u(A) + u(B) for all disjoint A, B,
/// where u is the dual upper function. Requires a normalized input.
LowerProbabilityCheck is_lower_probability(const SetFunction& lower);

/// The program {q >= 0, sum q = 1, q(E) >= l(E) for all E} with the given
/// objective over the point masses of q.
lp::LinearProgram dominance_program(const SetFunction& lower, std::vector<Rational> objective);

/// A dominating probability measure, if one exists.
std::optional<ProbMeasure> is_dominated(const SetFunction& lower);

/// A -> min { q(A) : q a measure dominating l }: the tightest lower envelope
/// above l. Throws DomainError when l is not dominated.
SetFunction natural_envelope(const SetFunction& lower);

struct EnvelopeGap {
    Mask set;
    Rational value;    // l(A)
    Rational envelope; // natural_envelope(l)(A)
};

struct EnvelopeCheck {
    bool holds = false;
    bool dominated = false;
    /// First set (in canonical order) where l differs from its natural
    /// envelope; absent when l is an envelope or not dominated.
    std::optional<EnvelopeGap> gap;
};

/// Dominated and equal to its own natural envelope.
EnvelopeCheck is_lower_envelope(const SetFunction& lower);

/// max { q(A) : q a measure with q(E) <= u(E) for all E }, u the dual upper
/// function. Throws DomainError unless l is a lower envelope.
Rational upper_envelope_value(const SetFunction& lower, const Subset& subset);

/// Pointwise minimum of the set functions of the given measures; always a
/// lower envelope. Throws InvalidInput on an empty list or mixed spaces.
SetFunction pointwise_minimum(std::span<const ProbMeasure> measures);

/// Every predicate at once.
struct LowerProbabilityReport {
    LowerProbabilityCheck lower_probability;
    std::optional<ProbMeasure> dominating_witness;
    EnvelopeCheck envelope;

    bool is_lower_probability() const { return lower_probability.holds; }
    bool is_dominated() const { return dominating_witness.has_value(); }
    bool is_lower_envelope() const { return envelope.holds; }
};

LowerProbabilityReport classify(const SetFunction& lower);

} // namespace lowprob

#endif
