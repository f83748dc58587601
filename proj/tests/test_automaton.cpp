#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "critex/arith.hpp"
#include "critex/error.hpp"

using namespace critex;
using support::pair_word;

namespace {

const Radix r2(2);

Dfa ones_then_01()
{
    // [1,1][0,1]*
    const int a[] = {1, 1}, b[] = {0, 1};
    std::vector<StateId> delta(2 * 4, kNoState);
    delta[0 * 4 + symbol_code(a, 2)] = 1;
    delta[1 * 4 + symbol_code(b, 2)] = 1;
    return Dfa::from_partial(r2, 2, DigitOrder::msd, 0, delta, {0, 1});
}

Dfa single_pair_21() { return support::finite_language(r2, 2, {pair_word({{1, 0}, {0, 1}})}); }

}  // namespace

TEST_CASE("product with itself, its complement and the universal machine")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto a = support::random_dfa(rng, 1 + rng() % 5, r2, 2);
        CHECK(language_equal(product(a, a, BoolOp::conjunction), a));
        CHECK(is_empty(product(a, complement(a), BoolOp::conjunction)));
        CHECK(language_equal(product(Dfa::accept_all(r2, 2, DigitOrder::msd), a,
                                     BoolOp::conjunction),
                             a));
        CHECK(language_equal(product(a, complement(a), BoolOp::disjunction),
                             Dfa::accept_all(r2, 2, DigitOrder::msd)));
    }
    CHECK_THROWS_AS(product(Dfa::accept_all(r2, 2, DigitOrder::msd),
                            Dfa::accept_all(r2, 1, DigitOrder::msd), BoolOp::conjunction),
                    Error);
    CHECK_THROWS_AS(product(Dfa::accept_all(r2, 1, DigitOrder::lsd),
                            Dfa::accept_all(r2, 1, DigitOrder::msd), BoolOp::conjunction),
                    Error);
}

TEST_CASE("complement examples")
{
    const auto none = Dfa::accept_none(r2, 2, DigitOrder::msd);
    CHECK(language_equal(complement(none), Dfa::accept_all(r2, 2, DigitOrder::msd)));
    const auto one = support::finite_language(r2, 2, {pair_word({{1, 1}})});
    CHECK(minimize(complement(complement(one))) == minimize(one));
    CHECK_FALSE(complement(one).accepts(pair_word({{1, 1}})));
    CHECK(complement(one).accepts(pair_word({{0, 1}})));
}

TEST_CASE("projection erases a track")
{
    const auto p = determinize(project(single_pair_21(), 1));
    CHECK(p.tracks() == 1);
    CHECK(p.accepts(DigitWord::from_string(r2, DigitOrder::msd, "10")));
    CHECK(enumerate_accepted(p, 4).size() == 1);
    CHECK(is_empty(determinize(project(Dfa::accept_none(r2, 2, DigitOrder::msd), 0))));

    const auto eq = minimize(determinize(project(arith::eq_rel(r2), 1)));
    CHECK(eq.state_count() == 1);
    CHECK(eq.accepting(0));
    CHECK_THROWS_AS(project(single_pair_21(), 2), Error);
}

TEST_CASE("determinize keeps languages")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto a = support::random_dfa(rng, 1 + rng() % 6, r2, 2);
        CHECK(language_equal(determinize(to_nfa(a)), a));
    }
    // Two initial states, one accepting "0" and one accepting "1".
    std::vector<std::vector<StateId>> succ(3 * 2);
    succ[0 * 2 + 0] = {2};
    succ[1 * 2 + 1] = {2};
    Nfa n(r2, 1, DigitOrder::msd, {0, 1}, succ, {0, 0, 1});
    const auto d = determinize(n);
    CHECK(d.accepts(DigitWord::from_string(r2, DigitOrder::msd, "0")));
    CHECK(d.accepts(DigitWord::from_string(r2, DigitOrder::msd, "1")));
    CHECK_FALSE(d.accepts(DigitWord::from_string(r2, DigitOrder::msd, "01")));
}

TEST_CASE("minimization is canonical")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto a = support::random_dfa(rng, 1 + rng() % 6, r2, 1);
        const auto m = minimize(a);
        CHECK(minimize(m) == m);
        // A redundant copy of a: every state duplicated, edges crossing at random.
        const auto n = a.state_count();
        std::vector<StateId> delta;
        std::vector<std::uint8_t> acc;
        for (StateId c = 0; c < 2; ++c)
            for (StateId s = 0; s < n; ++s) {
                for (std::uint32_t x = 0; x < 2; ++x)
                    delta.push_back(a.next(s, x) + static_cast<StateId>((rng() % 2) * n));
                acc.push_back(a.accepting(s) ? 1 : 0);
            }
        const Dfa twin(r2, 1, DigitOrder::msd, 0, delta, acc);
        CHECK(minimize(twin) == m);
        support::all_words(r2, 1, 8, [&](const DigitWord& w) { REQUIRE(m.accepts(w) == a.accepts(w)); });
    }
    std::vector<StateId> all4(4 * 2);
    for (StateId s = 0; s < 4; ++s)
        all4[s * 2] = all4[s * 2 + 1] = (s + 1) % 4;
    CHECK(minimize(Dfa(r2, 1, DigitOrder::msd, 0, all4, {1, 1, 1, 1})).state_count() == 1);
}

TEST_CASE("emptiness with shortest witnesses")
{
    CHECK(is_empty(Dfa::accept_none(r2, 2, DigitOrder::msd)));
    const auto all = Dfa::accept_all(r2, 2, DigitOrder::msd);
    CHECK_FALSE(is_empty(all));
    CHECK(shortest_accepted(all)->empty());
    CHECK(*shortest_accepted(single_pair_21()) == pair_word({{1, 0}, {0, 1}}));
}

TEST_CASE("infinite languages")
{
    CHECK(is_infinite(ones_then_01()));
    CHECK_FALSE(is_infinite(single_pair_21()));
    CHECK_FALSE(is_infinite(Dfa::accept_none(r2, 2, DigitOrder::msd)));
}

TEST_CASE("canonicalization drops leading zero symbols")
{
    const auto c = canonicalize(Dfa::accept_all(r2, 2, DigitOrder::msd));
    CHECK(c.accepts(pair_word({{1, 0}})));
    CHECK_FALSE(c.accepts(pair_word({{0, 0}, {1, 0}})));
    const auto f = support::finite_language(r2, 2, {pair_word({{0, 0}, {1, 1}}), pair_word({{1, 1}})});
    CHECK(language_equal(canonicalize(f), support::finite_language(r2, 2, {pair_word({{1, 1}})})));
    CHECK(canonicalize(c) == c);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto a = canonicalize(support::random_dfa(rng, 1 + rng() % 5, r2, 2, 0.6));
        support::all_words(r2, 2, 5, [&](const DigitWord& w) {
            if (!w.empty() && w.symbol(0) == 0)
                REQUIRE_FALSE(a.accepts(w));
        });
    }
}

TEST_CASE("zero closure accepts every padding")
{
    const auto z = zero_closure(ones_then_01());
    CHECK(z.zero_invariant());
    CHECK(z.accepts(pair_word({{1, 1}, {0, 1}})));
    CHECK(z.accepts(pair_word({{0, 0}, {0, 0}, {1, 1}, {0, 1}})));
    CHECK_FALSE(z.accepts(pair_word({{0, 1}, {1, 1}})));
}

TEST_CASE("length-lexicographic enumeration")
{
    CHECK(enumerate_accepted(single_pair_21(), 2).size() == 1);
    const auto all = enumerate_accepted(Dfa::accept_all(r2, 1, DigitOrder::msd), 1);
    REQUIRE(all.size() == 3);
    CHECK(all[0].empty());
    CHECK(all[1].to_string() == "0");
    CHECK(all[2].to_string() == "1");
    CHECK(enumerate_accepted(Dfa::accept_none(r2, 1, DigitOrder::msd), 5).empty());

    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const auto a = support::random_dfa(rng, 1 + rng() % 5, r2, 2);
        std::vector<DigitWord> expect;
        support::all_words(r2, 2, 4, [&](const DigitWord& w) {
            if (a.accepts(w))
                expect.push_back(w);
        });
        CHECK(enumerate_accepted(a, 4) == expect);
    }
}

TEST_CASE("pump decompositions")
{
    const auto c = canonicalize(ones_then_01());
    bool found = false;
    for (const auto& p : pump_decompositions(c))
        found = found || (p.u == pair_word({{1, 1}}) && p.v == pair_word({{0, 1}}));
    CHECK(found);
    CHECK(pump_decompositions(canonicalize(single_pair_21())).empty());

    const int one_zero[] = {1, 0};
    std::vector<StateId> delta(4, kNoState);
    delta[symbol_code(one_zero, 2)] = 0;
    const auto star = canonicalize(Dfa::from_partial(r2, 2, DigitOrder::msd, 0, delta, {1}));
    found = false;
    for (const auto& p : pump_decompositions(star))
        found = found || (p.u.empty() && p.v == pair_word({{1, 0}}));
    CHECK(found);
}

TEST_CASE("pumps are sound and bounded on random machines")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        const auto a = canonicalize(support::random_dfa(rng, 2 + rng() % 4, r2, 2, 0.5));
        const auto n = a.state_count();
        for (const auto& p : pump_decompositions(a)) {
            REQUIRE(!p.v.empty());
            REQUIRE(p.u.size() + p.v.size() <= n);
            REQUIRE(a.run(a.initial(), p.u) == p.loop_state);
            REQUIRE(a.run(p.loop_state, p.v) == p.loop_state);
            const auto uv = p.u + p.v;
            REQUIRE(p.increments[0] == decode_track(uv, 0) - decode_track(p.u, 0));
            REQUIRE(p.increments[1] == decode_track(uv, 1) - decode_track(p.u, 1));
            // Suffixes w from the loop state, up to five of them.
            int seen = 0;
            support::all_words(r2, 2, 3, [&](const DigitWord& w) {
                if (seen >= 5 || !a.accepting(a.run(p.loop_state, w)))
                    return;
                ++seen;
                for (std::size_t e = 0; e < 3; ++e)
                    REQUIRE(a.accepts(p.u + p.v.repeated(e) + w));
            });
        }
    }
}

TEST_CASE("reversal")
{
    const auto r = reverse(single_pair_21());
    CHECK(r.order() == DigitOrder::lsd);
    CHECK(r.accepts(DigitWord::from_tuples(r2, DigitOrder::lsd, {{0, 1}, {1, 0}})));
    CHECK(language_equal(reverse(reverse(single_pair_21())), single_pair_21()));
    const auto pal = support::finite_language(
        r2, 1,
        {DigitWord::from_string(r2, DigitOrder::msd, "101"),
         DigitWord::from_string(r2, DigitOrder::msd, "11")});
    auto back = reverse(pal);
    CHECK(back.order() == DigitOrder::lsd);
    support::all_words(r2, 1, 5, [&](const DigitWord& w) {
        REQUIRE(back.accepts(w.reversed()) == pal.accepts(w));
        REQUIRE(back.accepts(DigitWord(r2, 1, DigitOrder::lsd, w.symbols())) == pal.accepts(w));
    });
}

TEST_CASE("operations agree with direct simulation")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        const auto a = support::random_dfa(rng, 1 + rng() % 6, r2, 2);
        const auto b = support::random_dfa(rng, 1 + rng() % 6, r2, 2);
        const auto both = product(a, b, BoolOp::conjunction);
        const auto either = product(a, b, BoolOp::disjunction);
        const auto na = complement(a);
        const auto proj = determinize(project(a, 1));
        const auto rev = reverse(a);
        for (int j = 0; j < 1000; ++j) {
            const auto w = support::random_word(rng, r2, 2, rng() % 9);
            REQUIRE(both.accepts(w) == (a.accepts(w) && b.accepts(w)));
            REQUIRE(either.accepts(w) == (a.accepts(w) || b.accepts(w)));
            REQUIRE(na.accepts(w) == !a.accepts(w));
            REQUIRE(rev.accepts(w.reversed()) == a.accepts(w));
            if (a.accepts(w))
                REQUIRE(proj.accepts(w.track(0)));
        }
    }
}

TEST_CASE("sequence automata")
{
    const Dfao tm(r2, DigitOrder::msd, 0, {0, 1, 1, 0}, {0, 1});
    CHECK(tm.at(std::uint64_t{6}) == 0);
    CHECK(tm.at(BigInt(7)) == 1);
    CHECK(tm.leading_zero_invariant());
    CHECK(tm.output_alphabet() == std::vector<int>{0, 1});
    // Reading 0 from the start moves away: n = 0 and n = "0" disagree.
    const Dfao bad(r2, DigitOrder::msd, 0, {1, 1, 1, 1}, {0, 1});
    CHECK_FALSE(bad.leading_zero_invariant());
    // LSD-first Thue-Morse is the same machine; to_msd keeps the sequence.
    const Dfao lsd(r2, DigitOrder::lsd, 0, {0, 1, 1, 0}, {0, 1});
    const auto m = lsd.to_msd();
    for (std::uint64_t i = 0; i < 64; ++i)
        REQUIRE(m.at(i) == tm.at(i));
}
