#pragma once

#include <optional>

#include "critex/automaton.hpp"

namespace critex {

/// Atomic automatic relations. Every machine returned here is MSD-first and
/// zero-invariant; track t holds the t-th argument.
namespace arith {

Dfa eq_rel(Radix radix);   // x = y
Dfa lt_rel(Radix radix);   // x < y
Dfa le_rel(Radix radix);   // x <= y
Dfa add_rel(Radix radix);  // x + y = z
/// The LSD-first carry automaton behind add_rel, before reversal.
Dfa add_rel_lsd(Radix radix);
Dfa const_rel(Radix radix, const BigInt& value);  // x = value

/// a[x] = a[y]. The sequence must be leading-zero-invariant.
Dfa seq_eq(const Dfao& seq);
/// a[x] = c; throws if c is not an output of the sequence.
Dfa seq_const(const Dfao& seq, int c);

}  // namespace arith

enum class AtomKind { eq, lt, le, add, const_eq, seq_eq, seq_const };

/// A primitive predicate the formula compiler lowers every atom to.
struct RelationAtom {
    AtomKind kind;
    const Dfao* sequence = nullptr;  // seq atoms only
    BigInt constant = 0;             // const_eq: value; seq_const: output symbol

    int arity() const;
    Dfa to_dfa(Radix radix) const;
};

}  // namespace critex
