#include "lowprob/dempster.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "lowprob/error.hpp"

namespace lowprob {

MultivaluedMap::MultivaluedMap(FiniteSpace domain, FiniteSpace codomain, std::vector<Subset> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images))
{
    if (images_.size() != domain_.size()) {
        throw InvalidInput("multivalued map has " + std::to_string(images_.size()) + " images for a domain of size " +
                           std::to_string(domain_.size()));
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        require_same_space(images_[i].space(), codomain_, "multivalued map image");
        if (images_[i].is_empty()) {
            throw InvalidInput("image of \"" + domain_.label(i) + "\" is empty");
        }
    }
}

Subset MultivaluedMap::preimage_within(const Subset& target) const
{
    require_same_space(target.space(), codomain_, "preimage");
    Mask mask = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if ((images_[i].mask() & ~target.mask()) == 0) {
            mask |= Mask{1} << i;
        }
    }
    return Subset(domain_, mask);
}

PointMap::PointMap(FiniteSpace domain, FiniteSpace codomain, std::vector<std::size_t> targets)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), targets_(std::move(targets))
{
    if (targets_.size() != domain_.size()) {
        throw InvalidInput("point map must assign a target to every domain element");
    }
    for (auto t : targets_) {
        if (t >= codomain_.size()) {
            throw InvalidInput("point map target out of range");
        }
    }
}

MultivaluedMap PointMap::as_multivalued() const
{
    std::vector<Subset> images;
    images.reserve(targets_.size());
    for (auto t : targets_) {
        images.push_back(Subset::singleton(codomain_, t));
    }
    return MultivaluedMap(domain_, codomain_, std::move(images));
}

Rational pushforward(const ProbMeasure& p, const PointMap& g, const Subset& target)
{
    require_same_space(p.space(), g.domain(), "pushforward measure");
    require_same_space(target.space(), g.codomain(), "pushforward target");
    Rational total;
    for (std::size_t i = 0; i < g.domain().size(); ++i) {
        if (target.contains(g.target(i))) {
            total += p[i];
        }
    }
    return total;
}

SetFunction belief_from_mapping(const ProbMeasure& p, const MultivaluedMap& mapping)
{
    require_same_space(p.space(), mapping.domain(), "belief_from_mapping");
    // Each y contributes p(y) to every superset of its image.
    std::vector<Rational> masses(mapping.codomain().subset_count());
    for (std::size_t i = 0; i < mapping.domain().size(); ++i) {
        masses[mapping.image(i).mask()] += p[i];
    }
    return from_mass(SetFunction(mapping.codomain(), std::move(masses)));
}

std::size_t exhaustive_space_limit(std::size_t r)
{
    if (r <= 2) {
        return 5;
    }
    if (r == 3) {
        return 4;
    }
    return 3;
}

namespace {

// f(union) - sum over nonempty I of (-1)^(|I|+1) f(intersection over I).
Rational inclusion_exclusion_slack(const SetFunction& f, std::span<const Mask> sets)
{
    const std::size_t k = sets.size();
    Mask all = 0;
    for (auto s : sets) {
        all |= s;
    }
    Rational slack = f[all];
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
        Mask meet = f.space().full_mask();
        for (std::size_t i = 0; i < k; ++i) {
            if (((pick >> i) & 1U) != 0) {
                meet &= sets[i];
            }
        }
        if (std::popcount(pick) % 2 == 1) {
            slack -= f[meet];
        } else {
            slack += f[meet];
        }
    }
    return slack;
}

// Visits every k-combination (or k-sequence with repetition) of the canonical
// subset list; stops at the first violation.
std::optional<std::vector<Mask>> find_violation_exhaustive(const SetFunction& f, std::size_t k, bool sequences)
{
    const auto order = canonical_masks(f.space().size());
    const std::size_t total = order.size();
    if (!sequences && k > total) {
        return std::nullopt;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = sequences ? 0 : i;
    }
    std::vector<Mask> sets(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) {
            sets[i] = order[idx[i]];
        }
        if (inclusion_exclusion_slack(f, sets) < 0) {
            return sets;
        }
        std::size_t pos = k;
        if (sequences) {
            while (pos > 0 && idx[pos - 1] == total - 1) {
                --pos;
            }
            if (pos == 0) {
                return std::nullopt;
            }
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j) {
                idx[j] = 0;
            }
        } else {
            while (pos > 0 && idx[pos - 1] == total - k + (pos - 1)) {
                --pos;
            }
            if (pos == 0) {
                return std::nullopt;
            }
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

std::optional<std::vector<Mask>> find_violation_sampled(const SetFunction& f, std::size_t k,
                                                        const MonotoneCheckOptions& options)
{
    const auto order = canonical_masks(f.space().size());
    if (k > order.size()) {
        return std::nullopt;
    }
    std::mt19937_64 rng(*options.sampling_seed);
    std::vector<Mask> sets;
    for (std::size_t s = 0; s < options.samples; ++s) {
        sets.clear();
        while (sets.size() < k) {
            const Mask candidate = order[rng() % order.size()];
            if (options.literal_sequences || std::find(sets.begin(), sets.end(), candidate) == sets.end()) {
                sets.push_back(candidate);
            }
        }
        if (inclusion_exclusion_slack(f, sets) < 0) {
            return sets;
        }
    }
    return std::nullopt;
}

} // namespace

MonotoneCheck is_r_monotone(const SetFunction& f, std::size_t r, const MonotoneCheckOptions& options)
{
    if (r < 2) {
        throw InvalidInput("monotonicity order must be at least 2, got " + std::to_string(r));
    }
    if (r > options.max_r) {
        throw UnsupportedSize("monotonicity order " + std::to_string(r) + " exceeds the configured cap of " +
                              std::to_string(options.max_r));
    }
    if (!f.is_normalized()) {
        throw InvalidInput("monotonicity check requires a normalized set function");
    }

    MonotoneCheck result;
    const std::size_t n = f.space().size();
    for (std::size_t k = 2; k <= r; ++k) {
        std::optional<std::vector<Mask>> violation;
        if (n <= exhaustive_space_limit(k)) {
            violation = find_violation_exhaustive(f, k, options.literal_sequences);
        } else if (options.sampling_seed) {
            result.exhaustive = false;
            violation = find_violation_sampled(f, k, options);
        } else {
            throw UnsupportedSize("exhaustive " + std::to_string(k) + "-monotonicity check supports spaces of size <= " +
                                  std::to_string(exhaustive_space_limit(k)) + "; supply a sampling seed");
        }
        if (violation) {
            result.holds = false;
            result.failed_order = k;
            result.witness = std::move(*violation);
            return result;
        }
    }
    return result;
}

bool is_belief_function(const SetFunction& f)
{
    if (!f.is_normalized()) {
        throw InvalidInput("belief-function check requires a normalized set function");
    }
    const SetFunction m = mobius(f);
    if (!m[0].is_zero()) {
        return false;
    }
    for (const auto& v : m.values()) {
        if (v < 0) {
            return false;
        }
    }
    return true;
}

SetFunction simple_support(const Subset& focal)
{
    if (focal.is_empty()) {
        throw InvalidInput("simple support function needs a nonempty focal set");
    }
    std::vector<Rational> values(focal.space().subset_count());
    for (Mask mask = 0; mask < values.size(); ++mask) {
        if ((focal.mask() & ~mask) == 0) {
            values[mask] = 1;
        }
    }
    return SetFunction(focal.space(), std::move(values));
}

} // namespace lowprob
