#include "lowprob/space.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "lowprob/error.hpp"

namespace lowprob {

FiniteSpace::FiniteSpace(std::vector<std::string> labels)
{
    if (labels.empty()) {
        throw InvalidInput("finite space must have at least one element");
    }
    if (labels.size() > kMaxSize) {
        throw InvalidInput("finite space has " + std::to_string(labels.size()) + " elements; the cap is " +
                           std::to_string(kMaxSize));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (label.empty()) {
            throw InvalidInput("empty element label");
        }
        if (label.find(',') != std::string::npos || label.find('|') != std::string::npos) {
            throw InvalidInput("element label \"" + label + "\" contains a reserved character (',' or '|')");
        }
        if (!seen.insert(label).second) {
            throw InvalidInput("duplicate element label \"" + label + "\"");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FiniteSpace FiniteSpace::numbered(std::string_view prefix, std::size_t size)
{
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t i = 1; i <= size; ++i) {
        labels.push_back(std::string(prefix) + std::to_string(i));
    }
    return FiniteSpace(std::move(labels));
}

std::size_t FiniteSpace::index_of(std::string_view label) const
{
    const auto it = std::find(labels_->begin(), labels_->end(), label);
    if (it == labels_->end()) {
        throw InvalidInput("unknown element label \"" + std::string(label) + "\"");
    }
    return static_cast<std::size_t>(it - labels_->begin());
}

Subset::Subset(FiniteSpace space, Mask mask) : space_(std::move(space)), mask_(mask)
{
    if ((mask_ & ~space_.full_mask()) != 0) {
        throw InvalidInput("subset mask has bits outside the space");
    }
}

Subset Subset::singleton(const FiniteSpace& space, std::size_t index)
{
    if (index >= space.size()) {
        throw InvalidInput("element index out of range");
    }
    return Subset(space, Mask{1} << index);
}

Subset Subset::of(const FiniteSpace& space, std::span<const std::string> labels)
{
    Mask mask = 0;
    for (const auto& label : labels) {
        const Mask bit = Mask{1} << space.index_of(label);
        if ((mask & bit) != 0) {
            throw InvalidInput("label \"" + label + "\" repeated in subset");
        }
        mask |= bit;
    }
    return Subset(space, mask);
}

Subset Subset::parse(const FiniteSpace& space, std::string_view name)
{
    std::vector<std::string> labels;
    if (!name.empty()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = name.find(',', start);
            labels.emplace_back(name.substr(start, comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    return of(space, labels);
}

std::size_t Subset::size() const
{
    return static_cast<std::size_t>(std::popcount(mask_));
}

bool Subset::is_subset_of(const Subset& other) const
{
    require_same_space(space_, other.space_, "subset inclusion");
    return (mask_ & ~other.mask_) == 0;
}

Subset Subset::operator|(const Subset& other) const
{
    require_same_space(space_, other.space_, "subset union");
    return Subset(space_, mask_ | other.mask_);
}

Subset Subset::operator&(const Subset& other) const
{
    require_same_space(space_, other.space_, "subset intersection");
    return Subset(space_, mask_ & other.mask_);
}

std::string Subset::name() const
{
    return subset_name(space_, mask_);
}

std::vector<std::size_t> Subset::indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < space_.size(); ++i) {
        if (contains(i)) {
            out.push_back(i);
        }
    }
    return out;
}

bool canonical_less(Mask lhs, Mask rhs)
{
    const int lc = std::popcount(lhs);
    const int rc = std::popcount(rhs);
    if (lc != rc) {
        return lc < rc;
    }
    while (lhs != 0 && rhs != 0) {
        const int li = std::countr_zero(lhs);
        const int ri = std::countr_zero(rhs);
        if (li != ri) {
            return li < ri;
        }
        lhs &= lhs - 1;
        rhs &= rhs - 1;
    }
    return false;
}

std::vector<Mask> canonical_masks(std::size_t n)
{
    std::vector<Mask> masks(std::size_t{1} << n);
    for (std::size_t m = 0; m < masks.size(); ++m) {
        masks[m] = static_cast<Mask>(m);
    }
    std::sort(masks.begin(), masks.end(), canonical_less);
    return masks;
}

std::string subset_name(const FiniteSpace& space, Mask mask)
{
    std::string out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (((mask >> i) & 1U) != 0) {
            if (!out.empty()) {
                out += ',';
            }
            out += space.label(i);
        }
    }
    return out;
}

void require_same_space(const FiniteSpace& lhs, const FiniteSpace& rhs, std::string_view what)
{
    if (!(lhs == rhs)) {
        throw InvalidInput(std::string(what) + ": space mismatch");
    }
}

} // namespace lowprob
