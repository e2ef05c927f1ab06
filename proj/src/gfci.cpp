#include "cihash/gfci.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace cihash {

IterationFunction::IterationFunction(std::string name, Map map)
    : name_(std::move(name)), map_(std::move(map))
{
    if (name_.empty()) {
        throw std::invalid_argument("iteration function needs a name");
    }
    if (!map_) {
        throw std::invalid_argument("iteration function needs a map");
    }
}

BitVector IterationFunction::operator()(const BitVector& state) const
{
    BitVector result = map_(state);
    if (result.width() != state.width()) {
        throw std::invalid_argument("iteration function '" + name_ +
                                    "' changed the state width");
    }
    return result;
}

const IterationFunction& negation_function()
{
    static const IterationFunction negation{
        "negation", [](const BitVector& v) { return v.complement(); }};
    return negation;
}

namespace {

std::mutex registry_mutex;

std::map<std::string, IterationFunction, std::less<>>& registry()
{
    static std::map<std::string, IterationFunction, std::less<>> functions = [] {
        std::map<std::string, IterationFunction, std::less<>> seeded;
        seeded.emplace("negation", negation_function());
        return seeded;
    }();
    return functions;
}

}  // namespace

void register_iteration_function(IterationFunction f)
{
    const std::scoped_lock lock(registry_mutex);
    std::string name = f.name();
    const auto [it, inserted] = registry().emplace(std::move(name), std::move(f));
    if (!inserted) {
        throw std::invalid_argument("iteration function '" + it->first +
                                    "' already registered");
    }
}

const IterationFunction& lookup_iteration_function(std::string_view name)
{
    const std::scoped_lock lock(registry_mutex);
    const auto it = registry().find(name);
    if (it == registry().end()) {
        throw std::out_of_range("unknown iteration function '" + std::string(name) + "'");
    }
    return it->second;
}

SystemPoint::SystemPoint(StrategySequence s, BitVector e)
    : strategy(std::move(s)), state(std::move(e))
{
    if (strategy.width() != state.width()) {
        throw std::invalid_argument("strategy width " + std::to_string(strategy.width()) +
                                    " differs from state width " +
                                    std::to_string(state.width()));
    }
}

unsigned psi(std::size_t i, const StrategySubset& subset)
{
    return subset.contains(i) ? 1u : 0u;  // contains() rejects out-of-range i
}

BitVector apply_f_on_subset(const IterationFunction& f, const StrategySubset& subset,
                            const BitVector& state)
{
    require_same_width(subset.mask(), state);
    const BitVector iterated = f(state);
    BitVector out = state;
    for (std::size_t j = 1; j <= state.width(); ++j) {
        if (subset.contains(j)) {
            out.set(j, iterated.get(j));
        }
    }
    return out;
}

BitVector gfci_iterate(const IterationFunction& f, const BitVector& x0,
                       const StrategySequence& strategy, std::size_t steps)
{
    if (strategy.width() != x0.width()) {
        throw std::invalid_argument("strategy width differs from state width");
    }
    if (steps > strategy.size()) {
        throw std::out_of_range("strategy exhausted: " + std::to_string(steps) +
                                " steps requested, " + std::to_string(strategy.size()) +
                                " terms stored");
    }
    BitVector state = x0;
    for (std::size_t n = 0; n < steps; ++n) {
        state = apply_f_on_subset(f, strategy.term(n), state);
    }
    return state;
}

SystemPoint gfci_step(const IterationFunction& f, const SystemPoint& point)
{
    return SystemPoint(point.strategy.tail(),
                       apply_f_on_subset(f, point.strategy.head(), point.state));
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b)
{
    return (a ^ b).popcount();
}

double strategy_distance(const StrategySequence& a, const StrategySequence& b,
                         std::size_t terms)
{
    if (a.width() != b.width()) {
        throw std::invalid_argument("strategy width mismatch");
    }
    if (terms < 1) {
        throw std::invalid_argument("strategy distance needs at least one term");
    }
    if (a.size() < terms || b.size() < terms) {
        throw std::invalid_argument("insufficient strategy terms: need " +
                                    std::to_string(terms) + ", have " +
                                    std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
    }
    double sum = 0.0;
    double scale = 1.0;
    for (std::size_t k = 0; k < terms; ++k) {
        scale /= 10.0;
        sum += static_cast<double>(symmetric_difference_size(a.term(k), b.term(k))) * scale;
    }
    return (9.0 / static_cast<double>(a.width())) * sum;
}

double point_distance(const SystemPoint& a, const SystemPoint& b, std::size_t terms)
{
    return static_cast<double>(hamming_distance(a.state, b.state)) +
           strategy_distance(a.strategy, b.strategy, terms);
}

}  // namespace cihash
