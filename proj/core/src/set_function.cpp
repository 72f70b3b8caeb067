#include "lowprob/set_function.hpp"

#include <bit>

#include "lowprob/error.hpp"

namespace lowprob {

SetFunction::SetFunction(FiniteSpace space) : space_(std::move(space)), values_(space_.subset_count()) {}

SetFunction::SetFunction(FiniteSpace space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values))
{
    if (values_.size() != space_.subset_count()) {
        throw InvalidInput("set function table has " + std::to_string(values_.size()) + " entries, expected " +
                           std::to_string(space_.subset_count()));
    }
}

SetFunction SetFunction::vacuous(FiniteSpace space)
{
    SetFunction f(std::move(space));
    f.values_[f.space_.full_mask()] = 1;
    return f;
}

SetFunction SetFunction::of_measure(const ProbMeasure& p)
{
    SetFunction f(p.space());
    // Each mask extends a smaller one by its lowest element.
    for (Mask mask = 1; mask < f.values_.size(); ++mask) {
        const Mask low = mask & (~mask + 1);
        f.values_[mask] = f.values_[mask ^ low] + p[static_cast<std::size_t>(std::countr_zero(low))];
    }
    return f;
}

const Rational& SetFunction::operator()(const Subset& subset) const
{
    require_same_space(space_, subset.space(), "set function evaluation");
    return values_[subset.mask()];
}

SetFunction SetFunction::with_value(Mask mask, Rational value) const
{
    SetFunction out = *this;
    out.values_.at(mask) = std::move(value);
    return out;
}

bool SetFunction::is_normalized() const
{
    return values_.front() == 0 && values_.back() == 1;
}

ProbMeasure::ProbMeasure(FiniteSpace space, std::vector<Rational> point_mass)
    : space_(std::move(space)), point_mass_(std::move(point_mass))
{
    if (point_mass_.size() != space_.size()) {
        throw InvalidInput("measure has " + std::to_string(point_mass_.size()) + " point masses for a space of size " +
                           std::to_string(space_.size()));
    }
    Rational total;
    for (std::size_t i = 0; i < point_mass_.size(); ++i) {
        if (point_mass_[i] < 0) {
            throw InvalidInput("negative mass " + point_mass_[i].str() + " at \"" + space_.label(i) + "\"");
        }
        total += point_mass_[i];
    }
    if (total != 1) {
        throw InvalidInput("point masses sum to " + total.str() + ", not 1");
    }
}

ProbMeasure ProbMeasure::uniform(FiniteSpace space)
{
    const auto n = static_cast<long>(space.size());
    std::vector<Rational> masses(space.size(), Rational(1, n));
    return ProbMeasure(std::move(space), std::move(masses));
}

ProbMeasure ProbMeasure::point(FiniteSpace space, std::size_t index)
{
    std::vector<Rational> masses(space.size());
    masses.at(index) = 1;
    return ProbMeasure(std::move(space), std::move(masses));
}

ProbMeasure validate_measure(FiniteSpace space, std::vector<Rational> point_mass)
{
    return ProbMeasure(std::move(space), std::move(point_mass));
}

Rational measure_of(const ProbMeasure& p, const Subset& subset)
{
    require_same_space(p.space(), subset.space(), "measure_of");
    Rational total;
    for (std::size_t i = 0; i < p.space().size(); ++i) {
        if (subset.contains(i)) {
            total += p[i];
        }
    }
    return total;
}

SetFunction upper_from_lower(const SetFunction& lower)
{
    if (!lower.is_normalized()) {
        throw InvalidInput("upper_from_lower requires a normalized set function");
    }
    const Mask full = lower.space().full_mask();
    std::vector<Rational> values(lower.space().subset_count());
    for (Mask mask = 0; mask <= full; ++mask) {
        values[mask] = 1 - lower[full & ~mask];
    }
    return SetFunction(lower.space(), std::move(values));
}

// Both transforms run the standard in-place subset-sum recurrence, one
// element at a time: O(n 2^n).
SetFunction mobius(const SetFunction& f)
{
    std::vector<Rational> values(f.values().begin(), f.values().end());
    const std::size_t n = f.space().size();
    for (std::size_t i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        for (Mask mask = 0; mask < values.size(); ++mask) {
            if ((mask & bit) != 0) {
                values[mask] -= values[mask ^ bit];
            }
        }
    }
    return SetFunction(f.space(), std::move(values));
}

SetFunction from_mass(const SetFunction& mass)
{
    std::vector<Rational> values(mass.values().begin(), mass.values().end());
    const std::size_t n = mass.space().size();
    for (std::size_t i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        for (Mask mask = 0; mask < values.size(); ++mask) {
            if ((mask & bit) != 0) {
                values[mask] += values[mask ^ bit];
            }
        }
    }
    return SetFunction(mass.space(), std::move(values));
}

} // namespace lowprob
