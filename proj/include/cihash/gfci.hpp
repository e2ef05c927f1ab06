#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "cihash/bitvector.hpp"
#include "cihash/strategy.hpp"

namespace cihash {

/// A total map f : B^N -> B^N driving the chaotic iterations. The map must
/// preserve width; the call operator enforces it.
class IterationFunction {
public:
    using Map = std::function<BitVector(const BitVector&)>;

    IterationFunction(std::string name, Map map);

    const std::string& name() const noexcept { return name_; }
    BitVector operator()(const BitVector& state) const;

private:
    std::string name_;
    Map map_;
};

/// The built-in vectorial negation f(x) = complement(x).
const IterationFunction& negation_function();

/// Registry of pluggable iteration functions. "negation" is pre-registered;
/// registering a duplicate name throws.
void register_iteration_function(IterationFunction f);
const IterationFunction& lookup_iteration_function(std::string_view name);

/// A point (S, E) of the phase space: a strategy prefix plus the current state.
struct SystemPoint {
    StrategySequence strategy;
    BitVector state;

    SystemPoint(StrategySequence s, BitVector e);
};

/// Membership indicator: 1 if cell i belongs to the subset, else 0.
unsigned psi(std::size_t i, const StrategySubset& subset);

/// One iteration round: cells inside `subset` take their value from f(state),
/// cells outside keep their previous value.
BitVector apply_f_on_subset(const IterationFunction& f, const StrategySubset& subset,
                            const BitVector& state);

/// Iterate `steps` rounds, consuming the first `steps` terms of the strategy.
BitVector gfci_iterate(const IterationFunction& f, const BitVector& x0,
                       const StrategySequence& strategy, std::size_t steps);

/// One application of the phase-space map: shift the strategy, update the
/// state with the consumed head term.
SystemPoint gfci_step(const IterationFunction& f, const SystemPoint& point);

/// Count of cell positions where the two states disagree.
std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Default truncation depth for the strategy distance series. The truncation
/// error is bounded by 10^-terms, so 16 terms put it below double precision.
inline constexpr std::size_t default_distance_terms = 16;

/// K-term truncation of (9/N) * sum_k |S^k delta T^k| / 10^k, aligning k = 1
/// with the first stored term. Truncation error <= 10^-terms.
double strategy_distance(const StrategySequence& a, const StrategySequence& b,
                         std::size_t terms = default_distance_terms);

/// Hamming distance of the states plus the truncated strategy distance.
double point_distance(const SystemPoint& a, const SystemPoint& b,
                      std::size_t terms = default_distance_terms);

}  // namespace cihash
