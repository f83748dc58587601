#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "critex/automaton.hpp"
#include "critex/quotient.hpp"

namespace support {

using critex::Dfa;
using critex::DigitOrder;
using critex::DigitWord;
using critex::Radix;
using critex::StateId;

/// Trie acceptor for a finite set of words.
inline Dfa finite_language(Radix radix, int tracks, const std::vector<DigitWord>& words,
                           DigitOrder order = DigitOrder::msd)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    std::vector<StateId> delta(sigma, critex::kNoState);
    std::vector<std::uint8_t> acc{0};
    for (const auto& w : words) {
        StateId s = 0;
        for (auto sym : w.symbols()) {
            auto& t = delta[s * sigma + sym];
            if (t == critex::kNoState) {
                t = static_cast<StateId>(acc.size());
                acc.push_back(0);
                delta.insert(delta.end(), sigma, critex::kNoState);
            }
            s = delta[s * sigma + sym];
        }
        acc[s] = 1;
    }
    return Dfa::from_partial(radix, tracks, order, 0, std::move(delta), std::move(acc));
}

/// Complete machine with uniformly random transitions.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t states, Radix radix, int tracks,
                      double accept_probability = 0.4)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    std::vector<StateId> delta(states * sigma);
    for (auto& t : delta)
        t = static_cast<StateId>(rng() % states);
    std::vector<std::uint8_t> acc(states);
    std::bernoulli_distribution coin(accept_probability);
    for (auto& a : acc)
        a = coin(rng) ? 1 : 0;
    return Dfa(radix, tracks, DigitOrder::msd, 0, std::move(delta), std::move(acc));
}

/// Machine whose transitions are each present with probability `defined`.
inline Dfa random_partial_dfa(std::mt19937_64& rng, std::size_t states, Radix radix, int tracks,
                              double defined)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    std::vector<StateId> delta(states * sigma, critex::kNoState);
    std::bernoulli_distribution present(defined);
    for (auto& t : delta)
        if (present(rng))
            t = static_cast<StateId>(rng() % states);
    std::vector<std::uint8_t> acc(states);
    for (auto& a : acc)
        a = static_cast<std::uint8_t>(rng() % 2);
    return Dfa::from_partial(radix, tracks, DigitOrder::msd, 0, std::move(delta), std::move(acc));
}

/// Visits every word over the tuple alphabet of length <= max_len.
inline void all_words(Radix radix, int tracks, std::size_t max_len,
                      const std::function<void(const DigitWord&)>& visit,
                      DigitOrder order = DigitOrder::msd)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    std::vector<DigitWord> layer{DigitWord(radix, tracks, order)};
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<DigitWord> next;
        for (const auto& w : layer) {
            visit(w);
            if (len < max_len)
                for (std::uint32_t x = 0; x < sigma; ++x) {
                    auto v = w;
                    v.push_back(x);
                    next.push_back(std::move(v));
                }
        }
        layer = std::move(next);
    }
}

inline DigitWord random_word(std::mt19937_64& rng, Radix radix, int tracks, std::size_t len,
                             DigitOrder order = DigitOrder::msd)
{
    DigitWord w(radix, tracks, order);
    const auto sigma = radix.tuple_alphabet_size(tracks);
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(static_cast<std::uint32_t>(rng() % sigma));
    return w;
}

inline DigitWord pair_word(std::initializer_list<std::vector<int>> tuples, int k = 2)
{
    return DigitWord::from_tuples(Radix(k), DigitOrder::msd, tuples);
}

/// Largest quotient over accepted words of length <= max_len with nonzero
/// denominator. For a fixed state, length and denominator only the largest
/// numerator can lead to the maximum, so each layer keeps one numerator per
/// (state, denominator).
inline std::optional<critex::Rational> brute_max_quo(const Dfa& a, std::size_t max_len)
{
    const auto k = static_cast<std::uint64_t>(a.base());
    std::map<std::pair<StateId, std::uint64_t>, std::uint64_t> layer{{{a.initial(), 0}, 0}};
    std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
    for (std::size_t len = 0;; ++len) {
        for (const auto& [key, p] : layer) {
            const auto q = key.second;
            if (q == 0 || !a.accepting(key.first))
                continue;
            if (!best || p * best->second > best->first * q)
                best = {p, q};
        }
        if (len == max_len)
            break;
        std::map<std::pair<StateId, std::uint64_t>, std::uint64_t> next;
        for (const auto& [key, p] : layer)
            for (std::uint32_t x = 0; x < a.alphabet_size(); ++x) {
                const auto np = p * k + x % k;
                const auto nq = key.second * k + x / k;
                auto [it, fresh] = next.try_emplace({a.next(key.first, x), nq}, np);
                if (!fresh && np > it->second)
                    it->second = np;
            }
        layer = std::move(next);
    }
    if (!best)
        return std::nullopt;
    return critex::Rational(critex::BigInt(static_cast<unsigned long>(best->first)),
                            critex::BigInt(static_cast<unsigned long>(best->second)));
}

/// Canonical two-track machines with nonzero denominators, nonempty, from
/// partial random machines with 1..max_states states over base 2. Partial
/// machines give a useful mix of attained, unattained and infinite suprema.
inline std::vector<Dfa> random_pair_languages(std::uint64_t seed, std::size_t count,
                                              std::size_t max_states)
{
    std::mt19937_64 rng(seed);
    std::vector<Dfa> out;
    while (out.size() < count) {
        const auto raw = random_partial_dfa(rng, 1 + rng() % max_states, Radix(2), 2, 0.4);
        auto l = critex::prepare_quotient_language(raw);
        if (!critex::is_empty(l))
            out.push_back(std::move(l));
    }
    return out;
}

}  // namespace support
