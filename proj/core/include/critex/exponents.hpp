#pragma once

#include <optional>
#include <string>

#include "critex/quotient.hpp"

namespace critex {

enum class Measure { critical, c1, c2, ice1, ice2, dio, recurrence_constant };

const char* to_string(Measure m) noexcept;

struct ExponentResult {
    Measure kind;
    Rational value;
    /// Meaningful for critical, c1, ice1 and recurrence_constant.
    bool attained = false;
    std::optional<DigitWord> word;
    std::optional<PumpDecomposition> pump;
    /// The pair language the value was read from.
    Dfa language;
};

struct RecurrenceReport {
    bool recurrent = false;
    bool linearly_recurrent = false;
    /// "not-recurrent" or "unbounded-gaps" when not linearly recurrent.
    std::string reason;
    std::optional<ExponentResult> constant;
};

// Pair languages, all canonicalized. Tracks are (length, period) so that the
// quotient of a pair is the exponent of the factor it describes.

/// (q, p): some factor of length q has period p >= 1.
Dfa period_language(const Dfao& a);
/// (q, p): as period_language, restricted to occurrences whose factor occurs
/// again after every occurrence.
Dfa recurrent_period_language(const Dfao& a);
/// (q, p): the prefix of length q has period p >= 1.
Dfa prefix_period_language(const Dfao& a);
/// (i + l, i + p): a[i..i+l-1] has period p with l >= p >= 1.
Dfa diophantine_language(const Dfao& a);
/// (n, l): some length-l factor occurring at i reoccurs first at i + n.
Dfa gap_language(const Dfao& a);

ExponentResult critical_exponent(const Dfao& a);
ExponentResult recurrent_critical_exponent(const Dfao& a);
ExponentResult special_exponent(const Dfao& a);
std::pair<ExponentResult, ExponentResult> initial_critical_exponents(const Dfao& a);
ExponentResult diophantine_exponent(const Dfao& a);
bool is_recurrent(const Dfao& a);
RecurrenceReport linear_recurrence(const Dfao& a);

/// L restricted to pairs whose first component is at least the second.
Dfa length_at_least_period(const Dfa& pairs);

}  // namespace critex
