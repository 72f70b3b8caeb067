#ifndef LOWPROB_SPACE_HPP
#define LOWPROB_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lowprob {

using Mask = std::uint32_t;

/**
 * An ordered, finite set of named outcomes.
 *
 * Copies share the same immutable label table. Two spaces compare equal when
 * their label lists are identical (same labels, same order).
 */
class FiniteSpace {
public:
    /// Hard cap on the number of outcomes; set functions are dense tables of
    /// 2^size entries.
    static constexpr std::size_t kMaxSize = 16;

    /// Throws InvalidInput on an empty list, empty or duplicate labels, or
    /// more than kMaxSize labels.
    explicit FiniteSpace(std::vector<std::string> labels);

    /// Space with labels prefix1 .. prefixN.
    static FiniteSpace numbered(std::string_view prefix, std::size_t size);

    std::size_t size() const { return labels_->size(); }
    std::span<const std::string> labels() const { return *labels_; }
    const std::string& label(std::size_t index) const { return (*labels_)[index]; }

    /// Index of a label; throws InvalidInput if unknown.
    std::size_t index_of(std::string_view label) const;

    Mask full_mask() const { return static_cast<Mask>((std::uint64_t{1} << size()) - 1); }
    std::size_t subset_count() const { return std::size_t{1} << size(); }

    friend bool operator==(const FiniteSpace& lhs, const FiniteSpace& rhs)
    {
        return lhs.labels_ == rhs.labels_ || *lhs.labels_ == *rhs.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Subset of a FiniteSpace stored as a bitmask over element indices.
class Subset {
public:
    /// Throws InvalidInput if mask has bits outside the space.
    Subset(FiniteSpace space, Mask mask);

    static Subset empty(FiniteSpace space) { return Subset(std::move(space), 0); }
    static Subset full(const FiniteSpace& space) { return Subset(space, space.full_mask()); }
    static Subset singleton(const FiniteSpace& space, std::size_t index);

    /// Builds a subset from labels in any order; duplicates or unknown
    /// labels are rejected.
    static Subset of(const FiniteSpace& space, std::span<const std::string> labels);

    /// Parses a comma-joined label list ("" is the empty set). Labels may
    /// appear in any order; the result is canonical.
    static Subset parse(const FiniteSpace& space, std::string_view name);

    const FiniteSpace& space() const { return space_; }
    Mask mask() const { return mask_; }

    std::size_t size() const;
    bool is_empty() const { return mask_ == 0; }
    bool contains(std::size_t index) const { return ((mask_ >> index) & 1U) != 0; }
    bool is_subset_of(const Subset& other) const;

    Subset complement() const { return Subset(space_, space_.full_mask() & ~mask_); }
    Subset operator|(const Subset& other) const;
    Subset operator&(const Subset& other) const;

    /// Canonical name: labels in space order joined by ",".
    std::string name() const;

    /// Element indices in increasing order.
    std::vector<std::size_t> indices() const;

    friend bool operator==(const Subset& lhs, const Subset& rhs)
    {
        return lhs.mask_ == rhs.mask_ && lhs.space_ == rhs.space_;
    }

private:
    FiniteSpace space_;
    Mask mask_;
};

/// Strict ordering used everywhere subsets are listed: by cardinality, then
/// lexicographically on the increasing index sequence.
bool canonical_less(Mask lhs, Mask rhs);

/// All masks over an n-element space in canonical order.
std::vector<Mask> canonical_masks(std::size_t n);

/// Canonical name of a mask over the given space.
std::string subset_name(const FiniteSpace& space, Mask mask);

/// Throws InvalidInput("<what>: space mismatch") unless the spaces agree.
void require_same_space(const FiniteSpace& lhs, const FiniteSpace& rhs, std::string_view what);

} // namespace lowprob

#endif
