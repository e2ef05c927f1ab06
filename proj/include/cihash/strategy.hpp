#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cihash/bitvector.hpp"

namespace cihash {

/// A subset of [1,N] stored as an N-bit membership mask: mask bit j is set
/// exactly when cell j belongs to the subset.
class StrategySubset {
public:
    /// Empty subset over [1,width].
    explicit StrategySubset(std::size_t width) : mask_(width) {}

    static StrategySubset from_mask(BitVector mask);
    static StrategySubset from_indices(std::size_t width,
                                       std::span<const std::size_t> indices);
    static StrategySubset from_indices(std::size_t width,
                                       std::initializer_list<std::size_t> indices);
    /// The whole of [1,width].
    static StrategySubset full(std::size_t width);

    std::size_t width() const noexcept { return mask_.width(); }
    bool contains(std::size_t index) const { return mask_.get(index); }
    std::size_t cardinality() const noexcept { return mask_.popcount(); }
    const BitVector& mask() const noexcept { return mask_; }

    /// Ascending member indices; round-trips losslessly with from_indices.
    std::vector<std::size_t> indices() const;

    bool operator==(const StrategySubset&) const noexcept = default;

private:
    BitVector mask_;
};

/// |A delta B|, the cardinality of the symmetric difference.
std::size_t symmetric_difference_size(const StrategySubset& a, const StrategySubset& b);

/// Finite stored prefix of a strategy sequence (S^0, S^1, ...).
/// All terms share the sequence width.
class StrategySequence {
public:
    explicit StrategySequence(std::size_t width);
    StrategySequence(std::size_t width, std::vector<StrategySubset> terms);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// 0-based access: term(0) is the first stored term S^0.
    const StrategySubset& term(std::size_t i) const;

    void push_back(StrategySubset subset);

    /// First term; throws std::out_of_range on an empty sequence.
    const StrategySubset& head() const;
    /// Everything after the first term (the shift sigma applied once).
    StrategySequence tail() const;

    bool operator==(const StrategySequence&) const = default;

private:
    std::size_t width_;
    std::vector<StrategySubset> terms_;
};

}  // namespace cihash
