#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "critex/numeral.hpp"

namespace critex {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = ~StateId{0};

/// Upper bound on the size of any intermediate automaton; read once from
/// CRITEX_MAX_STATES (default 10^6).
std::size_t max_states();

/// Complete deterministic acceptor over the tuple alphabet Sigma_k^d.
///
/// Transitions are stored densely as delta[state * sigma + symbol]. A machine
/// flagged zero-invariant accepts a word iff it accepts every padding of it
/// with all-zero symbols (leading for MSD, trailing for LSD).
class Dfa {
public:
    Dfa(Radix radix, int tracks, DigitOrder order, StateId initial, std::vector<StateId> delta,
        std::vector<std::uint8_t> accepting, bool zero_invariant = false);

    /// Entries equal to kNoState are routed to a fresh dead state.
    static Dfa from_partial(Radix radix, int tracks, DigitOrder order, StateId initial,
                            std::vector<StateId> delta, std::vector<std::uint8_t> accepting,
                            bool zero_invariant = false);
    static Dfa accept_all(Radix radix, int tracks, DigitOrder order);
    static Dfa accept_none(Radix radix, int tracks, DigitOrder order);

    Radix radix() const noexcept { return radix_; }
    int base() const noexcept { return radix_.base(); }
    int tracks() const noexcept { return tracks_; }
    DigitOrder order() const noexcept { return order_; }
    std::uint32_t alphabet_size() const noexcept { return sigma_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }
    StateId initial() const noexcept { return initial_; }
    bool zero_invariant() const noexcept { return zero_invariant_; }
    void set_zero_invariant(bool value) noexcept { zero_invariant_ = value; }

    StateId next(StateId s, std::uint32_t symbol) const
    {
        return delta_[static_cast<std::size_t>(s) * sigma_ + symbol];
    }
    bool accepting(StateId s) const { return accepting_[s] != 0; }
    const std::vector<StateId>& transitions() const noexcept { return delta_; }
    const std::vector<std::uint8_t>& accepting_flags() const noexcept { return accepting_; }

    StateId run(StateId from, const DigitWord& word) const;
    bool accepts(const DigitWord& word) const;

    /// Same radix, track count and digit order.
    bool compatible_with(const Dfa& other) const noexcept;

    friend bool operator==(const Dfa& a, const Dfa& b);

private:
    void check_word(const DigitWord& word) const;

    Radix radix_;
    int tracks_;
    DigitOrder order_;
    std::uint32_t sigma_;
    StateId initial_;
    std::vector<StateId> delta_;
    std::vector<std::uint8_t> accepting_;
    bool zero_invariant_;
};

/// Nondeterministic acceptor; successor sets stored in compressed rows.
class Nfa {
public:
    Nfa(Radix radix, int tracks, DigitOrder order, std::vector<StateId> initial,
        const std::vector<std::vector<StateId>>& successors, std::vector<std::uint8_t> accepting);

    Radix radix() const noexcept { return radix_; }
    int tracks() const noexcept { return tracks_; }
    DigitOrder order() const noexcept { return order_; }
    std::uint32_t alphabet_size() const noexcept { return sigma_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }
    const std::vector<StateId>& initial() const noexcept { return initial_; }
    bool accepting(StateId s) const { return accepting_[s] != 0; }

    std::span<const StateId> next(StateId s, std::uint32_t symbol) const
    {
        const auto row = static_cast<std::size_t>(s) * sigma_ + symbol;
        return {targets_.data() + offsets_[row], targets_.data() + offsets_[row + 1]};
    }

    bool accepts(const DigitWord& word) const;

    /// Copy with a different set of initial states.
    Nfa with_initial(std::vector<StateId> initial) const;
    /// Copy with a different accepting set.
    Nfa with_accepting(std::vector<std::uint8_t> accepting) const;

private:
    Radix radix_;
    int tracks_;
    DigitOrder order_;
    std::uint32_t sigma_;
    std::vector<StateId> initial_;
    std::vector<std::size_t> offsets_;
    std::vector<StateId> targets_;
    std::vector<std::uint8_t> accepting_;
};

/// Deterministic automaton with output: the generator of a k-automatic
/// sequence. Input is one-track.
class Dfao {
public:
    Dfao(Radix radix, DigitOrder order, StateId initial, std::vector<StateId> delta,
         std::vector<int> output);

    Radix radix() const noexcept { return radix_; }
    int base() const noexcept { return radix_.base(); }
    DigitOrder order() const noexcept { return order_; }
    std::size_t state_count() const noexcept { return output_.size(); }
    StateId initial() const noexcept { return initial_; }
    StateId next(StateId s, int digit) const
    {
        return delta_[static_cast<std::size_t>(s) * static_cast<std::size_t>(radix_.base()) +
                      static_cast<std::size_t>(digit)];
    }
    int output(StateId s) const { return output_[s]; }
    const std::vector<StateId>& transitions() const noexcept { return delta_; }
    const std::vector<int>& outputs() const noexcept { return output_; }

    /// Sorted distinct outputs of reachable states (the output alphabet).
    std::vector<int> output_alphabet() const;

    /// a[n], reading the canonical representation of n in the machine's order.
    int at(const BigInt& n) const;
    int at(std::uint64_t n) const;

    /// Output after reading 0^i w equals output after w, for every w. For
    /// LSD machines the padding is trailing.
    bool leading_zero_invariant() const;

    /// Equivalent MSD-first machine (identity for MSD input).
    Dfao to_msd() const;

    friend bool operator==(const Dfao& a, const Dfao& b);

private:
    Radix radix_;
    DigitOrder order_;
    StateId initial_;
    std::vector<StateId> delta_;
    std::vector<int> output_;
};

/// x = u v w with u labelling a simple path to `loop_state` and v a simple
/// cycle there that avoids the other states of u.
struct PumpDecomposition {
    DigitWord u;
    DigitWord v;
    StateId loop_state = kNoState;
    /// increments[t] = [pi_t(uv)]_k - [pi_t(u)]_k
    std::vector<BigInt> increments;
};

enum class BoolOp { conjunction, disjunction };

/// Coarsest partition of states (all reachable or not) compatible with the
/// given labels and the transition function. Returns a block id per state.
std::vector<std::uint32_t> refine_partition(std::size_t states, std::uint32_t sigma,
                                            const std::vector<StateId>& delta,
                                            const std::vector<std::uint32_t>& labels);

Dfa product(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& a);
Nfa project(const Dfa& a, int drop_track);
Nfa to_nfa(const Dfa& a);
Dfa determinize(const Nfa& a);
/// Minimal complete machine, states numbered by breadth-first discovery from
/// the initial state with symbols scanned in increasing code order.
Dfa minimize(const Dfa& a);
Dfao minimize(const Dfao& a);
Dfa reverse(const Dfa& a);

/// Closes an NFA under all-zero padding: MSD machines gain every state
/// reachable from an initial state through zero symbols as initial states,
/// LSD machines mark states that reach acceptance through zero symbols.
Nfa absorb_padding(const Nfa& a);

/// Reinterprets `a` over `new_tracks` tracks: old track i reads new track
/// placement[i]. New tracks not referenced are unconstrained.
Dfa remap_tracks(const Dfa& a, int new_tracks, std::span<const int> placement);

bool is_empty(const Dfa& a);
/// Shortest accepted word (lexicographically least among the shortest).
std::optional<DigitWord> shortest_accepted(const Dfa& a);
bool is_infinite(const Dfa& a);
bool language_equal(const Dfa& a, const Dfa& b);

/// States that are reachable from the initial state and can reach acceptance.
std::vector<std::uint8_t> useful_states(const Dfa& a);

/// Zero-invariant closure of an MSD machine: accepts 0^i w (w not starting
/// with the zero symbol) iff 0^j w is accepted for some j.
Dfa zero_closure(const Dfa& a);
/// Removes words starting with the all-zero symbol; result minimized, zero
/// invariance flag cleared. MSD only.
Dfa canonicalize(const Dfa& a);

/// Every accepted word of length <= max_len, by length then lexicographically.
/// The callback returns false to stop early.
void for_each_accepted(const Dfa& a, std::size_t max_len,
                       const std::function<bool(const DigitWord&)>& visit);
std::vector<DigitWord> enumerate_accepted(const Dfa& a, std::size_t max_len);

/// First-repetition pump decompositions of a canonical machine. The callback
/// returns false to stop early.
void for_each_pump(const Dfa& a, const std::function<bool(const PumpDecomposition&)>& visit);
std::vector<PumpDecomposition> pump_decompositions(const Dfa& a);

}  // namespace critex
