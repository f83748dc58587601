#include "critex/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "critex/error.hpp"

namespace critex::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what)
{
    throw Error(Errc::invalid_input, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t number(std::string_view s, std::size_t line)
{
    s = trim(s);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        fail(line, "expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> words(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        const auto b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > b)
            out.push_back(s.substr(b, i - b));
    }
    return out;
}

struct Header {
    std::optional<std::uint64_t> base, tracks, states, initial;
    std::optional<std::string> kind, order;
};

}  // namespace

Automaton read_automaton(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    bool magic = false;
    Header h;
    std::optional<std::vector<std::uint64_t>> accepting;
    std::optional<std::map<std::uint64_t, int>> output;
    struct Trans {
        std::uint64_t from;
        std::vector<int> digits;
        std::uint64_t to;
        std::size_t line;
    };
    std::vector<Trans> trans;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (!magic) {
            if (line != "critex-automaton v1")
                fail(line_no, "expected header 'critex-automaton v1'");
            magic = true;
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            fail(line_no, "expected 'key: value'");
        const auto key = trim(line.substr(0, colon));
        const auto value = trim(line.substr(colon + 1));
        auto once = [&](auto& slot, auto v) {
            if (slot)
                fail(line_no, "duplicate '" + std::string(key) + "'");
            slot = v;
        };
        if (key == "base")
            once(h.base, number(value, line_no));
        else if (key == "tracks")
            once(h.tracks, number(value, line_no));
        else if (key == "states")
            once(h.states, number(value, line_no));
        else if (key == "initial")
            once(h.initial, number(value, line_no));
        else if (key == "kind")
            once(h.kind, std::string(value));
        else if (key == "order")
            once(h.order, std::string(value));
        else if (key == "accepting") {
            std::vector<std::uint64_t> qs;
            for (auto w : words(value))
                qs.push_back(number(w, line_no));
            once(accepting, qs);
        } else if (key == "output") {
            std::map<std::uint64_t, int> out;
            for (auto w : words(value)) {
                const auto c = w.find(':');
                if (c == std::string_view::npos)
                    fail(line_no, "expected '<state>:<symbol>'");
                const auto q = number(w.substr(0, c), line_no);
                const auto sym = number(w.substr(c + 1), line_no);
                if (sym > 1000000)
                    fail(line_no, "output symbol too large");
                if (!out.emplace(q, static_cast<int>(sym)).second)
                    fail(line_no, "duplicate output for state " + std::to_string(q));
            }
            once(output, out);
        } else if (key == "trans") {
            const auto open = value.find('[');
            const auto close = value.find(']');
            const auto arrow = value.find("->");
            if (open == std::string_view::npos || close == std::string_view::npos ||
                arrow == std::string_view::npos || !(open < close && close < arrow))
                fail(line_no, "expected 'trans: <q> [<d1>,...,<dd>] -> <q'>'");
            Trans t{number(value.substr(0, open), line_no), {}, number(value.substr(arrow + 2), line_no),
                    line_no};
            auto inner = value.substr(open + 1, close - open - 1);
            std::size_t i = 0;
            while (i <= inner.size()) {
                const auto comma = std::min(inner.find(',', i), inner.size());
                const auto d = number(inner.substr(i, comma - i), line_no);
                if (d > 255)
                    fail(line_no, "digit out of range");
                t.digits.push_back(static_cast<int>(d));
                i = comma + 1;
            }
            trans.push_back(std::move(t));
        } else {
            fail(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!magic)
        fail(line_no, "empty input");
    if (!h.base || !h.tracks || !h.kind || !h.order || !h.states || !h.initial)
        fail(line_no, "missing one of base, tracks, kind, order, states, initial");
    if (*h.base < 2 || *h.base > 255)
        fail(line_no, "base must be in 2..255");
    if (*h.tracks < 1 || *h.tracks > 24)
        fail(line_no, "tracks must be in 1..24");
    if (*h.states < 1 || *h.states > max_states())
        fail(line_no, "states out of range");
    if (*h.initial >= *h.states)
        fail(line_no, "initial state out of range");
    DigitOrder order;
    if (*h.order == "msd")
        order = DigitOrder::msd;
    else if (*h.order == "lsd")
        order = DigitOrder::lsd;
    else
        fail(line_no, "order must be msd or lsd");

    const Radix radix(static_cast<int>(*h.base));
    const int tracks = static_cast<int>(*h.tracks);
    const auto sigma = radix.tuple_alphabet_size(tracks);
    const auto n = static_cast<std::size_t>(*h.states);
    std::vector<StateId> delta(n * sigma, kNoState);
    for (const auto& t : trans) {
        if (t.from >= n || t.to >= n)
            fail(t.line, "state out of range");
        if (t.digits.size() != static_cast<std::size_t>(tracks))
            fail(t.line, "expected " + std::to_string(tracks) + " digits");
        for (auto d : t.digits)
            if (d >= radix.base())
                fail(t.line, "digit " + std::to_string(d) + " not below base");
        const auto sym = symbol_code(t.digits, radix.base());
        auto& slot = delta[t.from * sigma + sym];
        if (slot != kNoState && slot != t.to)
            fail(t.line, "conflicting transition");
        slot = static_cast<StateId>(t.to);
    }

    if (*h.kind == "dfa") {
        if (output)
            fail(line_no, "a dfa has no output line");
        std::vector<std::uint8_t> acc(n, 0);
        for (auto q : accepting.value_or(std::vector<std::uint64_t>{})) {
            if (q >= n)
                fail(line_no, "accepting state out of range");
            acc[q] = 1;
        }
        return Dfa::from_partial(radix, tracks, order, static_cast<StateId>(*h.initial),
                                 std::move(delta), std::move(acc));
    }
    if (*h.kind == "dfao") {
        if (tracks != 1)
            fail(line_no, "a dfao reads one track");
        if (accepting)
            fail(line_no, "a dfao has no accepting line");
        if (!output || output->size() != n)
            fail(line_no, "a dfao needs an output for every state");
        std::vector<int> out;
        for (std::size_t q = 0; q < n; ++q) {
            const auto it = output->find(q);
            if (it == output->end())
                fail(line_no, "no output for state " + std::to_string(q));
            out.push_back(it->second);
        }
        for (std::size_t i = 0; i < delta.size(); ++i)
            if (delta[i] == kNoState)
                fail(line_no, "dfao transition missing from state " + std::to_string(i / sigma));
        return Dfao(radix, order, static_cast<StateId>(*h.initial), std::move(delta),
                    std::move(out));
    }
    fail(line_no, "kind must be dfa or dfao");
}

Automaton read_automaton_string(const std::string& text)
{
    std::istringstream in(text);
    return read_automaton(in);
}

Automaton load_automaton(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::invalid_input, "cannot open " + path);
    return read_automaton(in);
}

namespace {

void write_header(std::ostream& out, Radix radix, int tracks, const char* kind, DigitOrder order,
                  std::size_t states, StateId initial)
{
    out << "critex-automaton v1\n"
        << "base: " << radix.base() << "\n"
        << "tracks: " << tracks << "\n"
        << "kind: " << kind << "\n"
        << "order: " << to_string(order) << "\n"
        << "states: " << states << "\n"
        << "initial: " << initial << "\n";
}

void write_transitions(std::ostream& out, Radix radix, int tracks, std::size_t states,
                       const std::vector<StateId>& delta)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    for (std::size_t q = 0; q < states; ++q)
        for (std::uint32_t sym = 0; sym < sigma; ++sym) {
            out << "trans: " << q << " [";
            for (int t = 0; t < tracks; ++t)
                out << (t ? "," : "") << symbol_digit(sym, t, radix.base());
            out << "] -> " << delta[q * sigma + sym] << "\n";
        }
}

}  // namespace

void write_automaton(std::ostream& out, const Dfa& a)
{
    write_header(out, a.radix(), a.tracks(), "dfa", a.order(), a.state_count(), a.initial());
    out << "accepting:";
    for (StateId q = 0; q < a.state_count(); ++q)
        if (a.accepting(q))
            out << " " << q;
    out << "\n";
    write_transitions(out, a.radix(), a.tracks(), a.state_count(), a.transitions());
}

void write_automaton(std::ostream& out, const Dfao& a)
{
    write_header(out, a.radix(), 1, "dfao", a.order(), a.state_count(), a.initial());
    out << "output:";
    for (StateId q = 0; q < a.state_count(); ++q)
        out << " " << q << ":" << a.output(q);
    out << "\n";
    write_transitions(out, a.radix(), 1, a.state_count(), a.transitions());
}

std::string to_text(const Dfa& a)
{
    std::ostringstream out;
    write_automaton(out, a);
    return out.str();
}

std::string to_text(const Dfao& a)
{
    std::ostringstream out;
    write_automaton(out, a);
    return out.str();
}

}  // namespace critex::io
