#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "support.hpp"

#include "critex/error.hpp"
#include "critex/io.hpp"

using namespace critex;

namespace {

std::string error_of(const std::string& text)
{
    try {
        io::read_automaton_string(text);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_input);
        return e.what();
    }
    return "";
}

const std::string dfao_head = "critex-automaton v1\nbase: 2\ntracks: 1\nkind: dfao\norder: msd\n";

}  // namespace

TEST_CASE("fixtures load")
{
    for (const char* name : {"tm.dfao", "zero.dfao", "rs.dfao", "vtm.dfao", "one_then_zeros.dfao",
                             "period01.dfao"})
        CHECK(std::holds_alternative<Dfao>(io::load_automaton(fixtures::path(name))));
    for (const char* name : {"pairs_ones_then_01.dfa", "finite.dfa", "ones_then_ones.dfa"}) {
        const auto a = io::load_automaton(fixtures::path(name));
        REQUIRE(std::holds_alternative<Dfa>(a));
        CHECK(std::get<Dfa>(a).tracks() == 2);
    }
    const auto finite = fixtures::pairs("finite.dfa");
    CHECK(finite.accepts(support::pair_word({{1, 0}, {0, 1}})));
    CHECK_FALSE(finite.accepts(support::pair_word({{1, 0}})));
}

TEST_CASE("random machines round trip")
{
    std::mt19937_64 rng(301);
    for (int i = 0; i < 200; ++i) {
        const Radix r(2 + static_cast<int>(rng() % 3));
        const int tracks = 1 + static_cast<int>(rng() % 2);
        const auto a = support::random_dfa(rng, 1 + rng() % 6, r, tracks);
        const auto back = std::get<Dfa>(io::read_automaton_string(io::to_text(a)));
        REQUIRE(back.state_count() == a.state_count());
        REQUIRE(back.transitions() == a.transitions());
        REQUIRE(back.accepting_flags() == a.accepting_flags());
        REQUIRE(back.order() == a.order());
        REQUIRE(io::to_text(back) == io::to_text(a));
    }
}

TEST_CASE("sequences round trip")
{
    for (const char* name : {"tm.dfao", "rs.dfao", "vtm.dfao"}) {
        const auto a = fixtures::sequence(name);
        const auto text = io::to_text(a);
        const auto back = std::get<Dfao>(io::read_automaton_string(text));
        CHECK(io::to_text(back) == text);
        for (std::uint64_t n = 0; n < 300; ++n)
            REQUIRE(back.at(n) == a.at(n));
    }
}

TEST_CASE("comments, blank lines and key order")
{
    const auto a = io::read_automaton_string(
        "# leading comment\n\ncritex-automaton v1\n"
        "kind: dfa  # trailing\ntracks: 1\nbase: 3\norder: lsd\n"
        "initial: 0\nstates: 2\naccepting: 1\n"
        "trans: 0 [2] -> 1\n");
    const auto& d = std::get<Dfa>(a);
    CHECK(d.base() == 3);
    CHECK(d.order() == DigitOrder::lsd);
    CHECK(d.accepts(DigitWord::from_string(Radix(3), DigitOrder::lsd, "2")));
    // Missing transitions lead to a dead state.
    CHECK_FALSE(d.accepts(DigitWord::from_string(Radix(3), DigitOrder::lsd, "1")));
    CHECK_FALSE(d.accepts(DigitWord::from_string(Radix(3), DigitOrder::lsd, "22")));
}

TEST_CASE("malformed input names the line")
{
    CHECK(error_of("") .find("empty input") != std::string::npos);
    CHECK(error_of("critex-automaton v2\n").find("line 1:") == 0);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 0\noutput: 0:0\ntrans: 0 [2] -> 0\n")
              .find("line 9:") == 0);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 0\noutput: 0:0\ntrans: 0 [0] -> 0\n")
              .find("missing") != std::string::npos);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 0\nbogus: 1\n").find("line 8:") == 0);
    CHECK(error_of(dfao_head + "states: x\n").find("line 6:") == 0);
    CHECK(error_of(dfao_head + "states: 1\nstates: 1\n").find("duplicate") != std::string::npos);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 3\noutput: 0:0\n").find("initial") != std::string::npos);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 0\noutput: 0:0\ntrans: 0 [0,1] -> 0\n")
              .find("line 9:") == 0);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 0\noutput: 0:0\ntrans: 0 [0] -> 5\n")
              .find("line 9:") == 0);
    CHECK(error_of(dfao_head + "states: 1\ninitial: 0\noutput: 0:0\n"
                               "trans: 0 [0] -> 0\ntrans: 0 [1] -> 0\ntrans: 0 [1] -> 1\n")
              .find("line") == 0);
    CHECK_FALSE(error_of("critex-automaton v1\nbase: 1\ntracks: 1\nkind: dfa\norder: msd\n"
                         "states: 1\ninitial: 0\n")
                    .empty());
    CHECK_FALSE(error_of("critex-automaton v1\nbase: 2\ntracks: 2\nkind: dfao\norder: msd\n"
                         "states: 1\ninitial: 0\noutput: 0:0\n")
                    .empty());
    CHECK_THROWS_AS(io::load_automaton("/nonexistent/file.dfa"), Error);
}
