#ifndef LOWPROB_EVIDENCE_HPP
#define LOWPROB_EVIDENCE_HPP

#include <span>
#include <vector>

#include "lowprob/set_function.hpp"

namespace lowprob {

/**
 * A dominated lower probability on Y together with one lower envelope on X
 * per element of Y.
 *
 * The hypotheses are checked at construction: the lower function on Y must
 * be normalized and dominated, and each conditional function must be a
 * normalized lower envelope over X. Violations raise InvalidInput with a
 * message naming the failed hypothesis.
 */
class EnvelopeEvidence {
public:
    EnvelopeEvidence(SetFunction lower, std::vector<SetFunction> conditionals);

    const FiniteSpace& x_space() const { return conditionals_.front().space(); }
    const FiniteSpace& y_space() const { return lower_.space(); }
    const SetFunction& lower() const { return lower_; }
    const SetFunction& conditional(std::size_t y) const { return conditionals_[y]; }
    std::span<const SetFunction> conditionals() const { return conditionals_; }

private:
    SetFunction lower_;
    std::vector<SetFunction> conditionals_;
};

} // namespace lowprob

#endif
