#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "critex/error.hpp"
#include "critex/exponents.hpp"
#include "critex/io.hpp"
#include "critex/logic.hpp"
#include "critex/oracle.hpp"
#include "critex/quotient.hpp"

namespace critex::cli {

namespace {

using nlohmann::ordered_json;

/// Ordered key/value report. The first line of the text form carries the
/// headline fields; every other field gets a line of its own.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void add(std::string key, ordered_json value, bool headline = false)
    {
        fields_.push_back({std::move(key), std::move(value), headline});
    }

    void print(std::ostream& out, bool json) const
    {
        if (json) {
            ordered_json j;
            j["command"] = command_;
            for (const auto& f : fields_)
                j[f.key] = f.value;
            out << j.dump(2) << "\n";
            return;
        }
        bool first = true;
        for (const auto& f : fields_)
            if (f.headline) {
                out << (first ? "" : " ") << f.key << "=" << render(f.value);
                first = false;
            }
        if (!first)
            out << "\n";
        for (const auto& f : fields_)
            if (!f.headline)
                out << f.key << "=" << render(f.value) << "\n";
    }

private:
    static std::string render(const ordered_json& v)
    {
        return v.is_string() ? v.get<std::string>() : v.dump();
    }

    struct Field {
        std::string key;
        ordered_json value;
        bool headline;
    };
    std::string command_;
    std::vector<Field> fields_;
};

std::string digest(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
        h ^= static_cast<unsigned char>(*it);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Dfao load_sequence(const std::string& path)
{
    auto a = io::load_automaton(path);
    if (!std::holds_alternative<Dfao>(a))
        throw Error(Errc::invalid_input, path + ": expected kind dfao");
    auto m = std::get<Dfao>(a).to_msd();
    if (!m.leading_zero_invariant())
        throw Error(Errc::invalid_input, path + ": output changes under leading zeros");
    return m;
}

Dfa load_pairs(const std::string& path)
{
    auto a = io::load_automaton(path);
    if (!std::holds_alternative<Dfa>(a))
        throw Error(Errc::invalid_input, path + ": expected kind dfa");
    auto d = std::get<Dfa>(std::move(a));
    if (d.tracks() != 2)
        throw Error(Errc::invalid_input, path + ": expected two tracks");
    return d.order() == DigitOrder::msd ? d : reverse(d);
}

std::string values_of(const DigitWord& w)
{
    std::string s;
    for (int t = 0; t < w.tracks(); ++t)
        s += (t ? "," : "") + decode_track(w, t).get_str();
    return s;
}

void add_witness(Report& r, const std::optional<DigitWord>& word,
                 const std::optional<PumpDecomposition>& pump)
{
    if (word) {
        r.add("witness-word", word->to_string());
        r.add("witness-values", values_of(*word));
    }
    if (pump) {
        r.add("witness-u", pump->u.to_string());
        r.add("witness-v", pump->v.to_string());
        r.add("witness-increments",
              pump->increments[0].get_str() + "," + pump->increments[1].get_str());
    }
}

void add_value(Report& r, const Rational& value, std::optional<bool> attained)
{
    r.add("value", value.to_string(), true);
    if (attained && value.is_finite())
        r.add("attained", *attained, true);
}

unsigned thread_count()
{
    if (const char* env = std::getenv("CRITEX_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return 1;
}

int exit_code(Errc c)
{
    switch (c) {
    case Errc::invalid_digit:
    case Errc::syntax:
    case Errc::unknown_identifier:
    case Errc::invalid_input:
    case Errc::incompatible:
        return input_error;
    case Errc::zero_denominator:
    case Errc::out_of_range:
    case Errc::undefined_gamma:
    case Errc::empty_language:
    case Errc::finite_language:
    case Errc::limit_exceeded:
        return precondition;
    case Errc::internal:
        return internal;
    }
    return internal;
}

std::vector<std::string> split_vars(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string v;
    while (std::getline(in, v, ','))
        if (!v.empty())
            out.push_back(v);
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Critical exponents and related measures of automatic sequences", "critex"};
    app.require_subcommand(1);

    std::string file, which = "critical", formula, vars, dump, oracle_kind;
    bool json = false, audit = false;
    std::size_t n = 1 << 14, max_period = 64, max_len = 8;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", file, "Automaton file")->required();
        sub->add_flag("--json", json, "Machine-readable output");
    };
    auto* exponent = app.add_subcommand("exponent", "Repetition exponent of a sequence");
    common(exponent);
    exponent->add_option("--which", which, "critical, c1, c2, ice1, ice2 or dio")
        ->check(CLI::IsMember({"critical", "c1", "c2", "ice1", "ice2", "dio"}));
    auto* recurrence = app.add_subcommand("recurrence", "Linear recurrence constant");
    common(recurrence);
    auto* sup = app.add_subcommand("sup", "Supremum of quotients of a pair language");
    common(sup);
    sup->add_flag("--audit", audit, "Recheck against the enumerated candidate set");
    auto* special = app.add_subcommand("special", "Largest special point of a pair language");
    common(special);
    auto* eval = app.add_subcommand("eval", "Evaluate or compile a formula over a sequence");
    common(eval);
    eval->add_option("--formula", formula, "Formula text")->required();
    eval->add_option("--vars", vars, "Comma-separated free-variable order");
    eval->add_option("--dump", dump, "Write the compiled automaton here");
    auto* oracle = app.add_subcommand("oracle", "Brute-force scans over a prefix");
    oracle->add_option("kind", oracle_kind, "prefix, scan, ice, recurrence or profile")
        ->required()
        ->check(CLI::IsMember({"prefix", "scan", "ice", "recurrence", "profile"}));
    common(oracle);
    oracle->add_option("--n", n, "Prefix length");
    oracle->add_option("--max-period", max_period, "Largest period scanned");
    oracle->add_option("--max-len", max_len,
                       "Largest factor length (recurrence) or word length (profile)");

    std::vector<std::string> argv_rest(args.rbegin(), args.rend());
    if (!argv_rest.empty())
        argv_rest.pop_back();
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : input_error;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        auto* used = app.get_subcommands().front();
        Report r(used->get_name());
        r.add("input", file);
        r.add("digest", digest(file));

        if (used == exponent) {
            const auto a = load_sequence(file);
            r.add("measure", which);
            std::optional<ExponentResult> e;
            if (which == "critical")
                e = critical_exponent(a);
            else if (which == "c1")
                e = recurrent_critical_exponent(a);
            else if (which == "c2")
                e = special_exponent(a);
            else if (which == "ice1" || which == "ice2") {
                auto [first, second] = initial_critical_exponents(a);
                e = which == "ice1" ? std::move(first) : std::move(second);
            } else
                e = diophantine_exponent(a);
            const bool has_attained = which == "critical" || which == "c1" || which == "ice1";
            add_value(r, e->value, has_attained ? std::optional<bool>(e->attained) : std::nullopt);
            add_witness(r, e->word, e->pump);
            r.add("pair-language-states", e->language.state_count());
        } else if (used == recurrence) {
            const auto a = load_sequence(file);
            const auto rep = linear_recurrence(a);
            r.add("linearly-recurrent", rep.linearly_recurrent, true);
            if (rep.linearly_recurrent)
                add_value(r, rep.constant->value, std::nullopt);
            else
                r.add("reason", rep.reason, true);
            if (rep.constant) {
                r.add("attained", rep.constant->attained);
                add_witness(r, rep.constant->word, rep.constant->pump);
                r.add("pair-language-states", rep.constant->language.state_count());
            }
        } else if (used == sup) {
            const auto l = load_pairs(file);
            const auto s = sup_quo(l);
            add_value(r, s.value, s.attained);
            add_witness(r, s.word, s.pump);
            r.add("pair-language-states", prepare_quotient_language(l).state_count());
            if (audit) {
                const auto c = candidates(l);
                const auto inf = is_sup_infinite(l);
                const auto beta = inf.infinite ? Rational::infinite()
                                               : min_qualifying_candidate(l, c, thread_count());
                r.add("audit", beta == s.value ? "agree" : "disagree");
                r.add("candidates", c.s1.size() + c.s2.size());
                if (beta != s.value)
                    throw Error(Errc::internal, "candidate audit found " + beta.to_string());
            }
        } else if (used == special) {
            const auto l = load_pairs(file);
            const auto s = largest_special_point(l);
            add_value(r, s.value, std::nullopt);
            add_witness(r, std::nullopt, s.pump);
        } else if (used == eval) {
            const auto a = load_sequence(file);
            const auto f = logic::parse(formula);
            auto order = split_vars(vars);
            if (vars.empty())
                order = logic::free_variables(*f);
            logic::CompilationEnv env{a.radix(), order, &a};
            if (order.empty()) {
                r.add("value", logic::evaluate_sentence(*f, env), true);
            } else {
                const auto d = logic::compile(*f, env);
                r.add("states", d.state_count(), true);
                r.add("tracks", vars.empty() ? [&] {
                    std::string s;
                    for (const auto& v : order)
                        s += (s.empty() ? "" : ",") + v;
                    return s;
                }() : vars, true);
                if (!dump.empty()) {
                    std::ofstream o(dump);
                    if (!o)
                        throw Error(Errc::invalid_input, "cannot write " + dump);
                    io::write_automaton(o, d);
                    r.add("dump", dump);
                } else {
                    r.add("automaton", io::to_text(d));
                }
            }
        } else if (used == oracle) {
            if (oracle_kind == "profile") {
                const auto l = load_pairs(file);
                ordered_json values = ordered_json::array();
                for (const auto& [len, q] : oracle::brute_quo_profile(l, max_len))
                    values.push_back(std::to_string(len) + ":" + q.to_string());
                r.add("max-len", max_len);
                r.add("profile", values);
            } else {
                const auto a = load_sequence(file);
                const auto s = oracle::sequence_prefix(a, n);
                r.add("n", n);
                if (oracle_kind == "prefix") {
                    std::string text;
                    bool wide = false;
                    for (int v : s.values)
                        wide = wide || v > 9;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        text += (wide && i ? "," : "") + std::to_string(s.values[i]);
                    r.add("prefix", text, true);
                } else if (oracle_kind == "scan") {
                    const auto w = oracle::scan_max_exponent(s, max_period);
                    r.add("value", w.exponent.to_string(), true);
                    r.add("position", w.position, true);
                    r.add("length", w.length, true);
                    r.add("period", w.period, true);
                } else if (oracle_kind == "ice") {
                    r.add("value", oracle::scan_ice(s).to_string(), true);
                } else {
                    r.add("value", oracle::scan_recurrence(s, max_len).to_string(), true);
                }
            }
        }
        const auto ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        r.add("wall-ms", static_cast<long long>(ms));
        r.print(out, json);
        return ok;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return internal;
    }
}

}  // namespace critex::cli
