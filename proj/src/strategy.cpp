#include "cihash/strategy.hpp"

#include <stdexcept>
#include <utility>

namespace cihash {

StrategySubset StrategySubset::from_mask(BitVector mask)
{
    StrategySubset s(mask.width());
    s.mask_ = std::move(mask);
    return s;
}

StrategySubset StrategySubset::from_indices(std::size_t width,
                                            std::span<const std::size_t> indices)
{
    StrategySubset s(width);
    for (const std::size_t i : indices) {
        s.mask_.set(i, true);  // set() rejects indices outside [1,width]
    }
    return s;
}

StrategySubset StrategySubset::from_indices(std::size_t width,
                                            std::initializer_list<std::size_t> indices)
{
    return from_indices(width, std::span<const std::size_t>(indices.begin(), indices.size()));
}

StrategySubset StrategySubset::full(std::size_t width)
{
    StrategySubset s(width);
    for (std::size_t i = 1; i <= width; ++i) {
        s.mask_.set(i, true);
    }
    return s;
}

std::vector<std::size_t> StrategySubset::indices() const
{
    std::vector<std::size_t> out;
    out.reserve(cardinality());
    for (std::size_t i = 1; i <= width(); ++i) {
        if (contains(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::size_t symmetric_difference_size(const StrategySubset& a, const StrategySubset& b)
{
    return (a.mask() ^ b.mask()).popcount();
}

StrategySequence::StrategySequence(std::size_t width) : width_(width)
{
    if (width == 0) {
        throw std::invalid_argument("StrategySequence width must be at least 1");
    }
}

StrategySequence::StrategySequence(std::size_t width, std::vector<StrategySubset> terms)
    : StrategySequence(width)
{
    for (auto& t : terms) {
        push_back(std::move(t));
    }
}

const StrategySubset& StrategySequence::term(std::size_t i) const
{
    if (i >= terms_.size()) {
        throw std::out_of_range("strategy term " + std::to_string(i) +
                                " beyond stored prefix of length " +
                                std::to_string(terms_.size()));
    }
    return terms_[i];
}

void StrategySequence::push_back(StrategySubset subset)
{
    if (subset.width() != width_) {
        throw std::invalid_argument("strategy term width " + std::to_string(subset.width()) +
                                    " differs from sequence width " + std::to_string(width_));
    }
    terms_.push_back(std::move(subset));
}

const StrategySubset& StrategySequence::head() const
{
    if (terms_.empty()) {
        throw std::out_of_range("empty strategy has no head");
    }
    return terms_.front();
}

StrategySequence StrategySequence::tail() const
{
    if (terms_.empty()) {
        throw std::out_of_range("empty strategy has no tail");
    }
    StrategySequence rest(width_);
    rest.terms_.assign(terms_.begin() + 1, terms_.end());
    return rest;
}

}  // namespace cihash
