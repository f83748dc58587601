#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critex/automaton.hpp"

namespace critex {

enum class Relation { lt, le, eq, ge, gt, ne };

const char* to_string(Relation rel) noexcept;
bool holds(int comparison, Relation rel) noexcept;

/// Threshold language L_{rel beta} = { x : quo_k(x) rel beta }.
struct Comparator {
    Rational threshold;  // finite, non-negative
    Relation relation;
    Radix radix;
};

/// Outcome of a supremum computation over quo_k(L).
struct SupResult {
    Rational value;  // possibly infinite
    bool attained = false;
    std::optional<DigitWord> word;          // attained: quo(word) == value
    std::optional<PumpDecomposition> pump;  // otherwise: gamma(pump) == value
};

struct CandidateSet {
    std::vector<Rational> s1;
    std::vector<Rational> s2;  // finite gamma values, each from pumps[i]
    std::vector<PumpDecomposition> s2_pumps;
    std::vector<PumpDecomposition> infinite_pumps;  // gamma infinite
};

struct ClosureReport {
    bool no_leading_zero = false;   // (a)
    bool numerator_dominates = false;  // (c)  no (p,q) in L with p < q
    bool decrement_closed = false;  // (d)  p > q implies (p-1, q) in L
    std::optional<DigitWord> counterexample_c;
    std::optional<DigitWord> counterexample_d;
    /// Infinite cardinality of quo_k(L) is reported but not decided.
    static constexpr const char* infinite_cardinality = "not checked";
};

/// gamma(u, v) = ([pi_1(uv)] - [pi_1(u)]) / ([pi_2(uv)] - [pi_2(u)]).
Rational gamma(const DigitWord& u, const DigitWord& v);

/// Two-track MSD machine accepting words whose second track is nonzero.
Dfa nonzero_denominator(Radix radix);

/// L restricted to nonzero denominators, canonicalized. The quotient
/// solvers below all run on this normal form.
Dfa prepare_quotient_language(const Dfa& language);

/// Explicit automaton for L_{rel beta}: built least-significant-digit first
/// over states (carry of p*Q, carry of q*P, verdict), then reversed to MSD and
/// minimized. Size grows with P and Q.
Dfa comparator_dfa(const Comparator& c);

/// Does some word of L with nonzero denominator satisfy quo(x) rel beta?
/// Decided without building the comparator, on the difference Q*p - P*q.
bool meets(const Dfa& language, const Comparator& c);
/// Shortest (then lexicographically least) such word, searching the lazy
/// product of L with the comparator.
std::optional<DigitWord> find_meeting_word(const Dfa& language, const Comparator& c);

/// sup quo_k(L) = infinity iff L meets L_{>= k^n}; on success the witness
/// pump has a zero second-track increment.
struct InfiniteSupTest {
    bool infinite = false;
    std::optional<PumpDecomposition> pump;
};
InfiniteSupTest is_sup_infinite(const Dfa& language);

/// S1 (quotients of accepted words shorter than the state count) and S2
/// (gamma over first-repetition pumps). Enumerative; throws limit_exceeded
/// past `budget` words or pumps.
CandidateSet candidates(const Dfa& language, std::size_t budget = 1000000);

/// The least candidate beta with L & L_{>beta} empty, checked with explicit
/// comparator automata. Qualification is upward closed, so the candidates are
/// bisected; `threads` > 1 probes several candidates per round concurrently.
Rational min_qualifying_candidate(const Dfa& language, const CandidateSet& cands,
                                  unsigned threads = 1);

SupResult sup_quo(const Dfa& language);

/// Largest special point of quo_k(L); L must be infinite.
SupResult largest_special_point(const Dfa& language);

ClosureReport check_pair_closure(const Dfa& language);

}  // namespace critex
