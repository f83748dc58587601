#pragma once

#include <string>
#include <variant>

#include "critex/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(CRITEX_TEST_DATA) + "/" + name; }

inline critex::Dfao sequence(const std::string& name)
{
    return std::get<critex::Dfao>(critex::io::load_automaton(path(name)));
}

inline critex::Dfa pairs(const std::string& name)
{
    return std::get<critex::Dfa>(critex::io::load_automaton(path(name)));
}

}  // namespace fixtures
