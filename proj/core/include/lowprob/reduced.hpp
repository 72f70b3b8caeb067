#ifndef LOWPROB_REDUCED_HPP
#define LOWPROB_REDUCED_HPP

#include <span>

#include "lowprob/dempster.hpp"
#include "lowprob/evidence.hpp"
#include "lowprob/lp.hpp"
#include "lowprob/set_function.hpp"

namespace lowprob {

// Lower values of envelope evidence computed on Y alone, without forming
// joint measures on X x Y. Nothing here calls into compat, so comparing the
// two is a genuine cross-check.

/// The |Y|-variable program
///   minimize   sum_y q(y) * l_y(A)
///   subject to q >= 0, sum_y q(y) = 1, q(E) >= l(E) for every E subset of Y.
lp::LinearProgram reduced_program(const EnvelopeEvidence& evidence, const Subset& a);

/// Optimal value of reduced_program.
Rational reduced_lower_value(const EnvelopeEvidence& evidence, const Subset& a);
SetFunction reduced_lower_function(const EnvelopeEvidence& evidence);

/// sum_y p(y) * l_y(A): the reduced value when the lower function on Y is a
/// measure. Each conditional must be normalized and over the same space.
Rational mixture_lower_value(const ProbMeasure& p, std::span<const SetFunction> conditionals, const Subset& a);
SetFunction mixture_lower_function(const ProbMeasure& p, std::span<const SetFunction> conditionals);

/// l({y : image(y) within A}): the reduced value when every conditional is
/// the simple support function of image(y). Throws DomainError unless l is a
/// lower envelope.
Rational support_lower_value(const SetFunction& lower, const MultivaluedMap& mapping, const Subset& a);
SetFunction support_lower_function(const SetFunction& lower, const MultivaluedMap& mapping);

} // namespace lowprob

#endif
