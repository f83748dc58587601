#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "critex/automaton.hpp"

namespace critex::logic {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// var | natural constant | term + term
struct Term {
    enum class Kind { variable, constant, sum };
    Kind kind = Kind::constant;
    std::string name;
    BigInt value = 0;
    TermPtr lhs, rhs;
    Span span;
};

enum class CompareOp { eq, ne, lt, le, gt, ge };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order formula over natural-number variables. Sequence atoms refer to
/// the single sequence of the compilation environment.
struct Formula {
    enum class Kind {
        exists,
        forall,
        conjunction,
        disjunction,
        implication,
        negation,
        compare,      // left op right
        seq_compare,  // seq[left] op seq[right], op in {eq, ne}
        seq_const,    // seq[left] op constant, op in {eq, ne}
    };
    Kind kind = Kind::compare;
    std::string var;       // quantifiers
    FormulaPtr lhs, rhs;   // connectives; quantifier and negation use lhs
    CompareOp op = CompareOp::eq;
    TermPtr left, right;   // atoms
    BigInt constant = 0;   // seq_const
    Span span;
};

// Builders, mostly for programmatic construction in the exponent pipelines.
TermPtr var(std::string name);
TermPtr constant(const BigInt& value);
TermPtr operator+(TermPtr a, TermPtr b);
FormulaPtr compare(TermPtr a, CompareOp op, TermPtr b);
FormulaPtr seq_equal(TermPtr a, TermPtr b);
FormulaPtr seq_is(TermPtr a, const BigInt& c);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string v, FormulaPtr body);
FormulaPtr forall(std::string v, FormulaPtr body);

/// Parses the ASCII predicate language:
///
///   formula := 'E' var ('<' term)? '.' formula | 'A' var ('<' term)? '.' formula
///            | formula '|' formula | formula '&' formula | formula '->' formula
///            | '~' formula | '(' formula ')' | atom
///   atom    := term relop term | 'seq[' term ']' ('='|'!=') ('seq[' term ']' | const)
///   term    := var | const | term '+' term
///
/// Precedence ~ > & > | > ->, '->' associates to the right and quantifiers
/// extend as far right as possible. "A j < t . f" is "A j . j < t -> f" and
/// "E j < t . f" is "E j . j < t & f".
FormulaPtr parse(std::string_view text);

std::string to_string(const Formula& f);
std::string to_string(const Term& t);

/// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);

struct CompilationEnv {
    Radix radix;
    /// Track order of the compiled automaton.
    std::vector<std::string> free_vars;
    /// Subject sequence for seq atoms; may be null for pure arithmetic.
    const Dfao* sequence = nullptr;
};

/// Compiles a formula to an MSD-first zero-invariant automaton whose track t
/// carries env.free_vars[t]. A sentence compiles to a one-track machine that
/// accepts everything (true) or nothing (false).
Dfa compile(const Formula& f, const CompilationEnv& env);

bool evaluate_sentence(const Formula& f, const CompilationEnv& env);

}  // namespace critex::logic
