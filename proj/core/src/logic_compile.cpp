#include <algorithm>
#include <map>
#include <optional>

#include "critex/arith.hpp"
#include "critex/error.hpp"
#include "critex/logic.hpp"

namespace critex::logic {

namespace {

/// A relation over named tracks, ordered by variable rank. With no tracks
/// left it degenerates to a truth value.
struct Relation {
    std::vector<std::string> vars;
    std::optional<Dfa> dfa;
    bool truth = false;
};

struct Definition {
    std::string aux;
    const Dfa* relation;
    std::vector<std::string> args;
};

class Compiler {
public:
    explicit Compiler(const CompilationEnv& env) : env_(env)
    {
        if (env.sequence && !(env.sequence->radix() == env.radix))
            throw Error(Errc::incompatible, "sequence base differs from the compilation base");
        for (const auto& v : env.free_vars) {
            if (ranks_.count(v))
                throw Error(Errc::invalid_input, "free variable '" + v + "' declared twice");
            rank(v);
            scope_.push_back(v);
        }
    }

    Relation run(const Formula& f)
    {
        switch (f.kind) {
        case Formula::Kind::exists:
        case Formula::Kind::forall: {
            if (std::find(scope_.begin(), scope_.end(), f.var) != scope_.end())
                throw Error(Errc::invalid_input, "variable '" + f.var + "' is already bound");
            rank(f.var);
            scope_.push_back(f.var);
            auto body = run(*f.lhs);
            scope_.pop_back();
            if (f.kind == Formula::Kind::exists)
                return eliminate(std::move(body), f.var);
            return negation(eliminate(negation(std::move(body)), f.var));
        }
        case Formula::Kind::negation: return negation(run(*f.lhs));
        case Formula::Kind::conjunction: return combine(run(*f.lhs), run(*f.rhs), BoolOp::conjunction);
        case Formula::Kind::disjunction: return combine(run(*f.lhs), run(*f.rhs), BoolOp::disjunction);
        case Formula::Kind::implication:
            return combine(negation(run(*f.lhs)), run(*f.rhs), BoolOp::disjunction);
        case Formula::Kind::compare: return compare_atom(f);
        case Formula::Kind::seq_compare:
        case Formula::Kind::seq_const: return sequence_atom(f);
        }
        throw Error(Errc::internal, "unknown formula node");
    }

    Dfa finish(const Relation& r) const
    {
        const auto m = static_cast<int>(env_.free_vars.size());
        if (!r.dfa) {
            auto out = r.truth ? Dfa::accept_all(env_.radix, std::max(m, 1), DigitOrder::msd)
                               : Dfa::accept_none(env_.radix, std::max(m, 1), DigitOrder::msd);
            return out;
        }
        std::vector<int> placement;
        for (const auto& v : r.vars) {
            const auto it = std::find(env_.free_vars.begin(), env_.free_vars.end(), v);
            if (it == env_.free_vars.end())
                throw Error(Errc::internal, "compiled relation mentions a bound variable");
            placement.push_back(static_cast<int>(it - env_.free_vars.begin()));
        }
        return minimize(remap_tracks(*r.dfa, m, placement));
    }

private:
    int rank(const std::string& v)
    {
        auto [it, inserted] = ranks_.emplace(v, static_cast<int>(ranks_.size()));
        return it->second;
    }

    const Dfa& cached(AtomKind kind)
    {
        auto it = atoms_.find(kind);
        if (it == atoms_.end()) {
            RelationAtom atom{kind, env_.sequence, 0};
            if ((kind == AtomKind::seq_eq) && env_.sequence == nullptr)
                throw Error(Errc::invalid_input, "formula uses seq[...] but no sequence was given");
            it = atoms_.emplace(kind, atom.to_dfa(env_.radix)).first;
        }
        return it->second;
    }

    const Dfa& constant_rel(const BigInt& c)
    {
        const auto key = c.get_str();
        auto it = constants_.find(key);
        if (it == constants_.end())
            it = constants_.emplace(key, arith::const_rel(env_.radix, c)).first;
        return it->second;
    }

    const Dfa& symbol_rel(const BigInt& c)
    {
        if (env_.sequence == nullptr)
            throw Error(Errc::invalid_input, "formula uses seq[...] but no sequence was given");
        const auto key = c.get_str();
        auto it = symbols_.find(key);
        if (it == symbols_.end()) {
            RelationAtom atom{AtomKind::seq_const, env_.sequence, c};
            it = symbols_.emplace(key, atom.to_dfa(env_.radix)).first;
        }
        return it->second;
    }

    Relation atom_relation(const Dfa& dfa, const std::vector<std::string>& args)
    {
        Relation r;
        r.vars = args;
        std::sort(r.vars.begin(), r.vars.end(),
                  [&](const std::string& a, const std::string& b) { return ranks_.at(a) < ranks_.at(b); });
        r.vars.erase(std::unique(r.vars.begin(), r.vars.end()), r.vars.end());
        std::vector<int> placement;
        for (const auto& a : args)
            placement.push_back(static_cast<int>(std::find(r.vars.begin(), r.vars.end(), a) - r.vars.begin()));
        r.dfa = minimize(remap_tracks(dfa, static_cast<int>(r.vars.size()), placement));
        return r;
    }

    static Dfa widen(const Relation& r, const std::vector<std::string>& vars, Radix radix)
    {
        if (!r.dfa)
            return r.truth ? Dfa::accept_all(radix, static_cast<int>(vars.size()), DigitOrder::msd)
                           : Dfa::accept_none(radix, static_cast<int>(vars.size()), DigitOrder::msd);
        if (r.vars == vars)
            return *r.dfa;
        std::vector<int> placement;
        for (const auto& v : r.vars)
            placement.push_back(static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
        return remap_tracks(*r.dfa, static_cast<int>(vars.size()), placement);
    }

    Relation combine(const Relation& a, const Relation& b, BoolOp op)
    {
        const bool is_and = op == BoolOp::conjunction;
        if (!a.dfa && !b.dfa)
            return Relation{{}, std::nullopt, is_and ? (a.truth && b.truth) : (a.truth || b.truth)};
        // Absorbing and neutral constants.
        for (const auto* c : {&a, &b}) {
            if (c->dfa)
                continue;
            const auto& other = c == &a ? b : a;
            if (c->truth == is_and)
                return other;
            return Relation{{}, std::nullopt, c->truth};
        }
        std::vector<std::string> vars = a.vars;
        for (const auto& v : b.vars)
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
        std::sort(vars.begin(), vars.end(),
                  [&](const std::string& x, const std::string& y) { return ranks_.at(x) < ranks_.at(y); });
        Relation out;
        out.dfa = minimize(product(widen(a, vars, env_.radix), widen(b, vars, env_.radix), op));
        out.vars = std::move(vars);
        return out;
    }

    static Relation negation(Relation r)
    {
        if (!r.dfa) {
            r.truth = !r.truth;
            return r;
        }
        r.dfa = complement(*r.dfa);
        return r;
    }

    static Relation eliminate(Relation r, const std::string& v)
    {
        const auto it = std::find(r.vars.begin(), r.vars.end(), v);
        if (!r.dfa || it == r.vars.end())
            return r;
        if (r.vars.size() == 1)
            return Relation{{}, std::nullopt, !is_empty(*r.dfa)};
        const auto track = static_cast<int>(it - r.vars.begin());
        auto dfa = minimize(determinize(absorb_padding(project(*r.dfa, track))));
        dfa.set_zero_invariant(true);
        r.vars.erase(it);
        r.dfa = std::move(dfa);
        return r;
    }

    std::string lower(const Term& t, std::vector<Definition>& defs)
    {
        switch (t.kind) {
        case Term::Kind::variable:
            if (std::find(scope_.begin(), scope_.end(), t.name) == scope_.end())
                throw Error(Errc::unknown_identifier, "unknown identifier '" + t.name + "' at " +
                                                          std::to_string(t.span.begin));
            return t.name;
        case Term::Kind::constant: {
            auto aux = fresh();
            defs.push_back({aux, &constant_rel(t.value), {aux}});
            return aux;
        }
        case Term::Kind::sum: {
            auto lhs = lower(*t.lhs, defs);
            auto rhs = lower(*t.rhs, defs);
            auto aux = fresh();
            defs.push_back({aux, &cached(AtomKind::add), {lhs, rhs, aux}});
            return aux;
        }
        }
        throw Error(Errc::internal, "unknown term node");
    }

    std::string fresh()
    {
        auto name = "#" + std::to_string(aux_counter_++);
        rank(name);
        return name;
    }

    Relation resolve(Relation core, const std::vector<Definition>& defs)
    {
        // Parents were defined after their operands, so walking backwards
        // eliminates each auxiliary as soon as its only users are conjoined.
        for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
            core = combine(core, atom_relation(*it->relation, it->args), BoolOp::conjunction);
            core = eliminate(std::move(core), it->aux);
        }
        return core;
    }

    Relation compare_atom(const Formula& f)
    {
        std::vector<Definition> defs;
        auto lhs = lower(*f.left, defs);
        auto rhs = lower(*f.right, defs);
        Relation core;
        switch (f.op) {
        case CompareOp::eq: core = atom_relation(cached(AtomKind::eq), {lhs, rhs}); break;
        case CompareOp::ne: core = negation(atom_relation(cached(AtomKind::eq), {lhs, rhs})); break;
        case CompareOp::lt: core = atom_relation(cached(AtomKind::lt), {lhs, rhs}); break;
        case CompareOp::le: core = atom_relation(cached(AtomKind::le), {lhs, rhs}); break;
        case CompareOp::gt: core = atom_relation(cached(AtomKind::lt), {rhs, lhs}); break;
        case CompareOp::ge: core = atom_relation(cached(AtomKind::le), {rhs, lhs}); break;
        }
        return resolve(std::move(core), defs);
    }

    Relation sequence_atom(const Formula& f)
    {
        std::vector<Definition> defs;
        auto lhs = lower(*f.left, defs);
        Relation core;
        if (f.kind == Formula::Kind::seq_compare) {
            auto rhs = lower(*f.right, defs);
            core = atom_relation(cached(AtomKind::seq_eq), {lhs, rhs});
        } else {
            core = atom_relation(symbol_rel(f.constant), {lhs});
        }
        if (f.op == CompareOp::ne)
            core = negation(std::move(core));
        else if (f.op != CompareOp::eq)
            throw Error(Errc::invalid_input, "sequence atoms support only '=' and '!='");
        return resolve(std::move(core), defs);
    }

    const CompilationEnv& env_;
    std::map<std::string, int> ranks_;
    std::vector<std::string> scope_;
    std::map<AtomKind, Dfa> atoms_;
    std::map<std::string, Dfa> constants_;
    std::map<std::string, Dfa> symbols_;
    int aux_counter_ = 0;
};

void check_free_variables(const Formula& f, const CompilationEnv& env)
{
    const auto free = free_variables(f);
    for (const auto& v : free)
        if (std::find(env.free_vars.begin(), env.free_vars.end(), v) == env.free_vars.end())
            throw Error(Errc::unknown_identifier, "unknown identifier '" + v + "'");
    for (const auto& v : env.free_vars)
        if (std::find(free.begin(), free.end(), v) == free.end())
            throw Error(Errc::incompatible,
                        "declared variable '" + v + "' does not occur free in the formula");
}

}  // namespace

Dfa compile(const Formula& f, const CompilationEnv& env)
{
    check_free_variables(f, env);
    Compiler compiler(env);
    return compiler.finish(compiler.run(f));
}

bool evaluate_sentence(const Formula& f, const CompilationEnv& env)
{
    if (!free_variables(f).empty())
        throw Error(Errc::invalid_input, "formula has free variables; it is not a sentence");
    CompilationEnv closed{env.radix, {}, env.sequence};
    Compiler compiler(closed);
    const auto r = compiler.run(f);
    if (!r.dfa)
        return r.truth;
    throw Error(Errc::internal, "sentence compiled to a non-constant relation");
}

}  // namespace critex::logic
