#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "critex/automaton.hpp"

namespace critex::io {

// Line-oriented text format, '#' starts a comment:
//
//   critex-automaton v1
//   base: 2
//   tracks: 1
//   kind: dfao
//   order: msd
//   states: 2
//   initial: 0
//   output: 0:0 1:1
//   trans: 0 [0] -> 0
//   ...
//
// A dfa lists "accepting: q q ..." instead of "output:". Missing dfa
// transitions go to an implicit dead state; a dfao must be total.

using Automaton = std::variant<Dfa, Dfao>;

Automaton read_automaton(std::istream& in);
Automaton read_automaton_string(const std::string& text);
Automaton load_automaton(const std::string& path);

void write_automaton(std::ostream& out, const Dfa& a);
void write_automaton(std::ostream& out, const Dfao& a);
std::string to_text(const Dfa& a);
std::string to_text(const Dfao& a);

}  // namespace critex::io
