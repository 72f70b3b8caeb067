#include "lowprob/envelope.hpp"

#include "lowprob/error.hpp"

namespace lowprob {

namespace {

void require_normalized(const SetFunction& f, std::string_view what)
{
    if (!f.is_normalized()) {
        throw InvalidInput(std::string(what) + " requires a normalized set function");
    }
}

std::vector<Rational> indicator(std::size_t n, Mask mask)
{
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (((mask >> i) & 1U) != 0) {
            out[i] = 1;
        }
    }
    return out;
}

} // namespace

LowerProbabilityCheck is_lower_probability(const SetFunction& lower)
{
    require_normalized(lower, "is_lower_probability");
    const SetFunction upper = upper_from_lower(lower);
    const auto order = canonical_masks(lower.space().size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const Mask a = order[i];
            const Mask b = order[j];
            if ((a & b) != 0) {
                continue;
            }
            if (lower[a | b] < lower[a] + lower[b]) {
                return {false, std::pair{a, b}, false};
            }
            if (upper[a | b] > upper[a] + upper[b]) {
                return {false, std::pair{a, b}, true};
            }
        }
    }
    return {};
}

lp::LinearProgram dominance_program(const SetFunction& lower, std::vector<Rational> objective)
{
    const std::size_t n = lower.space().size();
    lp::LinearProgram program;
    program.num_vars = n;
    program.objective = std::move(objective);
    program.nonneg = true;
    program.constraints.push_back({std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1)});
    for (Mask mask : canonical_masks(n)) {
        // Rows that hold for every measure add nothing.
        if (lower[mask] <= 0 || (mask == lower.space().full_mask() && lower[mask] <= 1)) {
            continue;
        }
        program.constraints.push_back({indicator(n, mask), lp::Relation::GreaterEqual, lower[mask]});
    }
    return program;
}

std::optional<ProbMeasure> is_dominated(const SetFunction& lower)
{
    const std::size_t n = lower.space().size();
    const auto outcome = lp::solve_min(dominance_program(lower, std::vector<Rational>(n)));
    if (outcome.status != lp::Status::Optimal) {
        return std::nullopt;
    }
    return ProbMeasure(lower.space(), outcome.witness);
}

SetFunction natural_envelope(const SetFunction& lower)
{
    if (!is_dominated(lower)) {
        throw DomainError("natural_envelope: set function is not dominated");
    }
    const std::size_t n = lower.space().size();
    std::vector<Rational> values(lower.space().subset_count());
    for (Mask mask = 1; mask < values.size(); ++mask) {
        const auto outcome = lp::solve_min(dominance_program(lower, indicator(n, mask)));
        if (outcome.status != lp::Status::Optimal) {
            throw DomainError("natural_envelope: dominance program not solvable at " +
                              subset_name(lower.space(), mask));
        }
        values[mask] = outcome.value;
    }
    return SetFunction(lower.space(), std::move(values));
}

EnvelopeCheck is_lower_envelope(const SetFunction& lower)
{
    require_normalized(lower, "is_lower_envelope");
    EnvelopeCheck check;
    check.dominated = is_dominated(lower).has_value();
    if (!check.dominated) {
        return check;
    }
    const SetFunction envelope = natural_envelope(lower);
    for (Mask mask : canonical_masks(lower.space().size())) {
        if (lower[mask] != envelope[mask]) {
            check.gap = EnvelopeGap{mask, lower[mask], envelope[mask]};
            return check;
        }
    }
    check.holds = true;
    return check;
}

Rational upper_envelope_value(const SetFunction& lower, const Subset& subset)
{
    require_same_space(lower.space(), subset.space(), "upper_envelope_value");
    if (!lower.is_normalized() || !is_lower_envelope(lower).holds) {
        throw DomainError("upper_envelope_value requires a lower envelope");
    }
    const SetFunction upper = upper_from_lower(lower);
    const std::size_t n = lower.space().size();

    lp::LinearProgram program;
    program.num_vars = n;
    program.nonneg = true;
    program.objective = indicator(n, subset.mask());
    for (auto& c : program.objective) {
        c = -c;
    }
    program.constraints.push_back({std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1)});
    for (Mask mask = 1; mask < lower.space().full_mask(); ++mask) {
        program.constraints.push_back({indicator(n, mask), lp::Relation::LessEqual, upper[mask]});
    }
    const auto outcome = lp::solve_min(program);
    if (outcome.status != lp::Status::Optimal) {
        throw DomainError("upper_envelope_value: no measure below the upper function");
    }
    return -outcome.value;
}

SetFunction pointwise_minimum(std::span<const ProbMeasure> measures)
{
    if (measures.empty()) {
        throw InvalidInput("pointwise_minimum needs at least one measure");
    }
    SetFunction result = SetFunction::of_measure(measures.front());
    std::vector<Rational> values(result.values().begin(), result.values().end());
    for (const auto& q : measures.subspan(1)) {
        require_same_space(q.space(), result.space(), "pointwise_minimum");
        const SetFunction fq = SetFunction::of_measure(q);
        for (Mask mask = 0; mask < values.size(); ++mask) {
            if (fq[mask] < values[mask]) {
                values[mask] = fq[mask];
            }
        }
    }
    return SetFunction(result.space(), std::move(values));
}

LowerProbabilityReport classify(const SetFunction& lower)
{
    LowerProbabilityReport report;
    report.lower_probability = is_lower_probability(lower);
    report.dominating_witness = is_dominated(lower);
    report.envelope = is_lower_envelope(lower);
    return report;
}

} // namespace lowprob
