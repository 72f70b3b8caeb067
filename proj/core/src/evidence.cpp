#include "lowprob/evidence.hpp"

#include "lowprob/envelope.hpp"
#include "lowprob/error.hpp"

namespace lowprob {

EnvelopeEvidence::EnvelopeEvidence(SetFunction lower, std::vector<SetFunction> conditionals)
    : lower_(std::move(lower)), conditionals_(std::move(conditionals))
{
    if (conditionals_.size() != lower_.space().size()) {
        throw InvalidInput("expected one conditional lower envelope per element of Y (" +
                           std::to_string(lower_.space().size()) + "), got " + std::to_string(conditionals_.size()));
    }
    if (!lower_.is_normalized()) {
        throw InvalidInput("ℓ not normalized");
    }
    if (!is_dominated(lower_)) {
        throw InvalidInput("ℓ not dominated");
    }
    for (std::size_t y = 0; y < conditionals_.size(); ++y) {
        const auto& cond = conditionals_[y];
        require_same_space(cond.space(), conditionals_.front().space(), "conditional lower envelope");
        if (!cond.is_normalized() || !is_lower_envelope(cond).holds) {
            throw InvalidInput("λ_y not a lower envelope (y = " + lower_.space().label(y) + ")");
        }
    }
}

} // namespace lowprob
