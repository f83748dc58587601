#include "critex/exponents.hpp"

#include "critex/arith.hpp"
#include "critex/error.hpp"
#include "critex/logic.hpp"

namespace critex {

const char* to_string(Measure m) noexcept
{
    switch (m) {
    case Measure::critical: return "critical";
    case Measure::c1: return "c1";
    case Measure::c2: return "c2";
    case Measure::ice1: return "ice1";
    case Measure::ice2: return "ice2";
    case Measure::dio: return "dio";
    case Measure::recurrence_constant: return "recurrence";
    }
    return "?";
}

namespace {

constexpr const char* kPeriod =
    "p >= 1 & E i . A j . j + p < q -> seq[i+j] = seq[i+p+j]";

constexpr const char* kRecurrentPeriod =
    "p >= 1 & E i . (A j . j + p < q -> seq[i+j] = seq[i+p+j])"
    " & A j . (A m . m < q -> seq[i+m] = seq[j+m])"
    " -> E l . l > j & A m . m < q -> seq[i+m] = seq[l+m]";

constexpr const char* kPrefixPeriod = "p >= 1 & A j . j + p < q -> seq[j] = seq[j+p]";

constexpr const char* kDiophantine =
    "E i . E l . E p . s = i + l & t = i + p & l >= p & p >= 1"
    " & A j . j + p < l -> seq[i+j] = seq[i+p+j]";

constexpr const char* kGap =
    "l >= 1 & E i . (A j . j < l -> seq[i+j] = seq[i+n+j])"
    " & A t . (0 < t & t < n) -> E j . j < l & ~ seq[i+j] = seq[i+t+j]";

constexpr const char* kRecurrent = "A i . A q . E j . j > i & A m . m < q -> seq[i+m] = seq[j+m]";

Dfao msd_sequence(const Dfao& a)
{
    auto m = a.to_msd();
    if (!m.leading_zero_invariant())
        throw Error(Errc::invalid_input, "sequence automaton is not leading-zero-invariant");
    return m;
}

Dfa compile_pairs(const Dfao& a, const char* formula, const char* first, const char* second)
{
    const auto seq = msd_sequence(a);
    logic::CompilationEnv env{seq.radix(), {first, second}, &seq};
    return canonicalize(logic::compile(*logic::parse(formula), env));
}

ExponentResult from_sup(Measure kind, Dfa language)
{
    auto r = sup_quo(language);
    return {kind, r.value, r.attained, std::move(r.word), std::move(r.pump), std::move(language)};
}

ExponentResult from_special(Measure kind, Dfa language)
{
    auto r = largest_special_point(language);
    return {kind, r.value, false, std::nullopt, std::move(r.pump), std::move(language)};
}

}  // namespace

Dfa period_language(const Dfao& a) { return compile_pairs(a, kPeriod, "q", "p"); }

Dfa recurrent_period_language(const Dfao& a)
{
    return compile_pairs(a, kRecurrentPeriod, "q", "p");
}

Dfa prefix_period_language(const Dfao& a) { return compile_pairs(a, kPrefixPeriod, "q", "p"); }

Dfa diophantine_language(const Dfao& a) { return compile_pairs(a, kDiophantine, "s", "t"); }

Dfa gap_language(const Dfao& a) { return compile_pairs(a, kGap, "n", "l"); }

ExponentResult critical_exponent(const Dfao& a)
{
    return from_sup(Measure::critical, period_language(a));
}

ExponentResult recurrent_critical_exponent(const Dfao& a)
{
    return from_sup(Measure::c1, recurrent_period_language(a));
}

ExponentResult special_exponent(const Dfao& a)
{
    return from_special(Measure::c2, period_language(a));
}

std::pair<ExponentResult, ExponentResult> initial_critical_exponents(const Dfao& a)
{
    auto l = prefix_period_language(a);
    auto first = from_sup(Measure::ice1, l);
    auto second = from_special(Measure::ice2, std::move(l));
    return {std::move(first), std::move(second)};
}

ExponentResult diophantine_exponent(const Dfao& a)
{
    return from_special(Measure::dio, diophantine_language(a));
}

bool is_recurrent(const Dfao& a)
{
    const auto seq = msd_sequence(a);
    logic::CompilationEnv env{seq.radix(), {}, &seq};
    return logic::evaluate_sentence(*logic::parse(kRecurrent), env);
}

RecurrenceReport linear_recurrence(const Dfao& a)
{
    RecurrenceReport r;
    r.recurrent = is_recurrent(a);
    if (!r.recurrent) {
        r.reason = "not-recurrent";
        return r;
    }
    auto c = from_sup(Measure::recurrence_constant, gap_language(a));
    r.linearly_recurrent = c.value.is_finite();
    if (!r.linearly_recurrent)
        r.reason = "unbounded-gaps";
    r.constant = std::move(c);
    return r;
}

Dfa length_at_least_period(const Dfa& pairs)
{
    if (pairs.tracks() != 2 || pairs.order() != DigitOrder::msd)
        throw Error(Errc::incompatible, "expected a two-track MSD automaton");
    const auto ge = complement(arith::lt_rel(pairs.radix()));
    return canonicalize(minimize(product(zero_closure(pairs), ge, BoolOp::conjunction)));
}

}  // namespace critex
