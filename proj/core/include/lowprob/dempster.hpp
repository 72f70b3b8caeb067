#ifndef LOWPROB_DEMPSTER_HPP
#define LOWPROB_DEMPSTER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lowprob/set_function.hpp"

namespace lowprob {

/// Assigns to every outcome y of the domain the nonempty set of codomain
/// outcomes consistent with it.
class MultivaluedMap {
public:
    /// images[i] is the image of domain element i. Throws InvalidInput when
    /// an image is empty, over the wrong space, or the count is wrong.
    MultivaluedMap(FiniteSpace domain, FiniteSpace codomain, std::vector<Subset> images);

    const FiniteSpace& domain() const { return domain_; }
    const FiniteSpace& codomain() const { return codomain_; }
    const Subset& image(std::size_t index) const { return images_[index]; }
    std::span<const Subset> images() const { return images_; }

    /// {y : image(y) is contained in target}, as a subset of the domain.
    Subset preimage_within(const Subset& target) const;

private:
    FiniteSpace domain_;
    FiniteSpace codomain_;
    std::vector<Subset> images_;
};

/// A total function from one finite space to another.
class PointMap {
public:
    PointMap(FiniteSpace domain, FiniteSpace codomain, std::vector<std::size_t> targets);

    const FiniteSpace& domain() const { return domain_; }
    const FiniteSpace& codomain() const { return codomain_; }
    std::size_t target(std::size_t index) const { return targets_[index]; }

    /// The multivalued map with singleton images.
    MultivaluedMap as_multivalued() const;

private:
    FiniteSpace domain_;
    FiniteSpace codomain_;
    std::vector<std::size_t> targets_;
};

/// p({y : g(y) in A}).
Rational pushforward(const ProbMeasure& p, const PointMap& g, const Subset& target);

/// Belief function induced by p and a multivalued map: A -> p({y : image(y) within A}).
SetFunction belief_from_mapping(const ProbMeasure& p, const MultivaluedMap& mapping);

struct MonotoneCheckOptions {
    /// Largest order accepted; larger r raises UnsupportedSize.
    std::size_t max_r = 3;
    /// When the space is too large for exhaustive enumeration, sample this
    /// many random collections instead of failing. Unset: fail.
    std::optional<std::uint64_t> sampling_seed;
    std::size_t samples = 20000;
    /// Enumerate ordered sequences with repetition, the literal reading of
    /// the inequality, instead of unordered collections of distinct sets.
    bool literal_sequences = false;
};

struct MonotoneCheck {
    bool holds = true;
    /// False when the verdict rests on random sampling.
    bool exhaustive = true;
    /// Order at which the violation was found.
    std::size_t failed_order = 0;
    /// Sets (masks) of a violating collection, in enumeration order.
    std::vector<Mask> witness;
};

/// Largest space size for which order r is checked exhaustively.
std::size_t exhaustive_space_limit(std::size_t r);

/**
 * Checks the r-th order inclusion-exclusion inequality
 *
 *     f(A1 u ... u Ar) >= sum over nonempty I of (-1)^(|I|+1) f(intersection of Ai, i in I)
 *
 * for every collection of r distinct subsets, and recursively for every
 * order from 2 up to r. Collections are visited in canonical subset order,
 * so the reported witness is the first violation in that order.
 */
MonotoneCheck is_r_monotone(const SetFunction& f, std::size_t r, const MonotoneCheckOptions& options = {});

/// Möbius masses all nonnegative and zero at the empty set.
bool is_belief_function(const SetFunction& f);

/// 1 on supersets of focal, 0 elsewhere. Throws InvalidInput on empty focal.
SetFunction simple_support(const Subset& focal);

} // namespace lowprob

#endif
