#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "critex/automaton.hpp"

namespace critex::oracle {

struct PrefixSample {
    std::vector<int> values;
    const Dfao* source = nullptr;

    std::size_t size() const noexcept { return values.size(); }
};

/// First n terms, each evaluated by running the automaton on (i)_k.
PrefixSample sequence_prefix(const Dfao& a, std::size_t n);

struct RepetitionWitness {
    Rational exponent;
    std::size_t position = 0;
    std::size_t length = 0;
    std::size_t period = 0;
};

/// Largest |w|/p over factors w of the sample with a period p <= max_period.
/// Among maximal factors the leftmost wins, then the smaller period.
RepetitionWitness scan_max_exponent(const PrefixSample& s, std::size_t max_period);

/// Largest exponent of a prefix of the sample.
Rational scan_ice(const PrefixSample& s);

/// Largest (gap between consecutive occurrences) / l over factors of length
/// l <= max_len, using only occurrence pairs that lie inside the sample.
Rational scan_recurrence(const PrefixSample& s, std::size_t max_len);

/// quo of every accepted word with nonzero denominator, up to max_len
/// symbols, ordered by length then lexicographically.
std::vector<std::pair<std::size_t, Rational>> brute_quo_profile(const Dfa& language,
                                                                std::size_t max_len);

}  // namespace critex::oracle
