#include "lowprob/reduced.hpp"

#include "lowprob/envelope.hpp"
#include "lowprob/error.hpp"

namespace lowprob {

lp::LinearProgram reduced_program(const EnvelopeEvidence& evidence, const Subset& a)
{
    require_same_space(a.space(), evidence.x_space(), "reduced_program");
    const std::size_t n = evidence.y_space().size();

    lp::LinearProgram program;
    program.num_vars = n;
    program.nonneg = true;
    program.objective.resize(n);
    for (std::size_t y = 0; y < n; ++y) {
        program.objective[y] = evidence.conditional(y)[a.mask()];
    }
    program.constraints.push_back({std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1)});
    for (Mask e = 0; e < evidence.y_space().subset_count(); ++e) {
        std::vector<Rational> row(n);
        for (std::size_t y = 0; y < n; ++y) {
            if (((e >> y) & 1U) != 0) {
                row[y] = 1;
            }
        }
        program.constraints.push_back({std::move(row), lp::Relation::GreaterEqual, evidence.lower()[e]});
    }
    return program;
}

Rational reduced_lower_value(const EnvelopeEvidence& evidence, const Subset& a)
{
    const auto outcome = lp::solve_min(reduced_program(evidence, a));
    if (outcome.status != lp::Status::Optimal) {
        // Dominance of the lower function was checked at construction.
        throw DomainError("reduced program has no optimum at " + a.name());
    }
    return outcome.value;
}

SetFunction reduced_lower_function(const EnvelopeEvidence& evidence)
{
    const FiniteSpace& xs = evidence.x_space();
    std::vector<Rational> values(xs.subset_count());
    for (Mask mask = 0; mask < values.size(); ++mask) {
        values[mask] = reduced_lower_value(evidence, Subset(xs, mask));
    }
    return SetFunction(xs, std::move(values));
}

namespace {

void check_mixture_inputs(const ProbMeasure& p, std::span<const SetFunction> conditionals)
{
    if (conditionals.size() != p.space().size()) {
        throw InvalidInput("mixture needs one conditional function per element of Y");
    }
    for (const auto& cond : conditionals) {
        require_same_space(cond.space(), conditionals.front().space(), "mixture conditional");
        if (!cond.is_normalized()) {
            throw InvalidInput("mixture conditionals must be normalized");
        }
    }
}

} // namespace

Rational mixture_lower_value(const ProbMeasure& p, std::span<const SetFunction> conditionals, const Subset& a)
{
    check_mixture_inputs(p, conditionals);
    require_same_space(a.space(), conditionals.front().space(), "mixture_lower_value");
    Rational total;
    for (std::size_t y = 0; y < conditionals.size(); ++y) {
        total += p[y] * conditionals[y][a.mask()];
    }
    return total;
}

SetFunction mixture_lower_function(const ProbMeasure& p, std::span<const SetFunction> conditionals)
{
    check_mixture_inputs(p, conditionals);
    const FiniteSpace xs = conditionals.front().space();
    std::vector<Rational> values(xs.subset_count());
    for (Mask mask = 0; mask < values.size(); ++mask) {
        for (std::size_t y = 0; y < conditionals.size(); ++y) {
            values[mask] += p[y] * conditionals[y][mask];
        }
    }
    return SetFunction(xs, std::move(values));
}

namespace {

void check_support_inputs(const SetFunction& lower, const MultivaluedMap& mapping)
{
    require_same_space(lower.space(), mapping.domain(), "support_lower_value");
    if (!lower.is_normalized() || !is_lower_envelope(lower).holds) {
        throw DomainError("support_lower_value requires a lower envelope on Y");
    }
}

} // namespace

Rational support_lower_value(const SetFunction& lower, const MultivaluedMap& mapping, const Subset& a)
{
    check_support_inputs(lower, mapping);
    return lower(mapping.preimage_within(a));
}

SetFunction support_lower_function(const SetFunction& lower, const MultivaluedMap& mapping)
{
    check_support_inputs(lower, mapping);
    const FiniteSpace& xs = mapping.codomain();
    std::vector<Rational> values(xs.subset_count());
    for (Mask mask = 0; mask < values.size(); ++mask) {
        values[mask] = lower(mapping.preimage_within(Subset(xs, mask)));
    }
    return SetFunction(xs, std::move(values));
}

} // namespace lowprob
