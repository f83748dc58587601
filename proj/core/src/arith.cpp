#include "critex/arith.hpp"

#include <algorithm>

#include "critex/error.hpp"

namespace critex::arith {

namespace {

Dfao require_msd_sequence(const Dfao& seq)
{
    auto msd = seq.to_msd();
    if (!msd.leading_zero_invariant())
        throw Error(Errc::invalid_input, "sequence automaton is not leading-zero-invariant");
    return msd;
}

}  // namespace

Dfa eq_rel(Radix radix)
{
    const int k = radix.base();
    const auto sigma = radix.tuple_alphabet_size(2);
    std::vector<StateId> delta(sigma, kNoState);
    for (int d = 0; d < k; ++d)
        delta[static_cast<std::size_t>(d + k * d)] = 0;
    return Dfa::from_partial(radix, 2, DigitOrder::msd, 0, std::move(delta), {1}, true);
}

namespace {

// State 0: equal so far, state 1: x already smaller.
Dfa order_rel(Radix radix, bool or_equal)
{
    const int k = radix.base();
    const auto sigma = radix.tuple_alphabet_size(2);
    std::vector<StateId> delta(2 * sigma, kNoState);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            const auto sym = static_cast<std::size_t>(x + k * y);
            if (x == y)
                delta[sym] = 0;
            else if (x < y)
                delta[sym] = 1;
            delta[sigma + sym] = 1;
        }
    return Dfa::from_partial(radix, 2, DigitOrder::msd, 0, std::move(delta),
                             {static_cast<std::uint8_t>(or_equal ? 1 : 0), 1}, true);
}

}  // namespace

Dfa lt_rel(Radix radix)
{
    return order_rel(radix, false);
}

Dfa le_rel(Radix radix)
{
    return order_rel(radix, true);
}

Dfa add_rel_lsd(Radix radix)
{
    // State = carry into the current position. Accept with carry 0.
    const int k = radix.base();
    const auto sigma = radix.tuple_alphabet_size(3);
    std::vector<StateId> delta(2 * sigma, kNoState);
    for (int carry = 0; carry < 2; ++carry)
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) {
                const int sum = x + y + carry;
                const int z = sum % k;
                const int digits[] = {x, y, z};
                delta[static_cast<std::size_t>(carry) * sigma + symbol_code(digits, k)] =
                    static_cast<StateId>(sum / k);
            }
    return Dfa::from_partial(radix, 3, DigitOrder::lsd, 0, std::move(delta), {1, 0}, true);
}

Dfa add_rel(Radix radix)
{
    return reverse(add_rel_lsd(radix));
}

Dfa const_rel(Radix radix, const BigInt& value)
{
    const auto digits = encode(value, radix);
    const auto len = digits.size();
    const auto sigma = radix.tuple_alphabet_size(1);
    // States 0..len: number of digits matched; leading zeros loop at 0.
    std::vector<StateId> delta((len + 1) * sigma, kNoState);
    std::vector<std::uint8_t> accepting(len + 1, 0);
    accepting[len] = 1;
    delta[0] = 0;
    for (std::size_t i = 0; i < len; ++i)
        delta[i * sigma + digits.symbol(i)] = static_cast<StateId>(i + 1);
    return minimize(Dfa::from_partial(radix, 1, DigitOrder::msd, 0, std::move(delta),
                                      std::move(accepting), true));
}

Dfa seq_eq(const Dfao& seq)
{
    const auto a = require_msd_sequence(seq);
    const int k = a.base();
    const auto n = a.state_count();
    const auto sigma = a.radix().tuple_alphabet_size(2);
    std::vector<StateId> delta(n * n * sigma);
    std::vector<std::uint8_t> accepting(n * n);
    for (StateId s = 0; s < n; ++s)
        for (StateId t = 0; t < n; ++t) {
            const auto id = static_cast<std::size_t>(s) * n + t;
            accepting[id] = a.output(s) == a.output(t) ? 1 : 0;
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y)
                    delta[id * sigma + static_cast<std::size_t>(x + k * y)] =
                        static_cast<StateId>(static_cast<std::size_t>(a.next(s, x)) * n +
                                             a.next(t, y));
        }
    const auto init = static_cast<StateId>(static_cast<std::size_t>(a.initial()) * n + a.initial());
    return minimize(Dfa(a.radix(), 2, DigitOrder::msd, init, std::move(delta), std::move(accepting),
                        true));
}

Dfa seq_const(const Dfao& seq, int c)
{
    const auto a = require_msd_sequence(seq);
    const auto alphabet = a.output_alphabet();
    if (!std::binary_search(alphabet.begin(), alphabet.end(), c))
        throw Error(Errc::invalid_input,
                    "symbol " + std::to_string(c) + " is not an output of the sequence");
    std::vector<std::uint8_t> accepting;
    for (StateId s = 0; s < a.state_count(); ++s)
        accepting.push_back(a.output(s) == c ? 1 : 0);
    return minimize(
        Dfa(a.radix(), 1, DigitOrder::msd, a.initial(), a.transitions(), std::move(accepting), true));
}

}  // namespace critex::arith

namespace critex {

int RelationAtom::arity() const
{
    switch (kind) {
    case AtomKind::eq:
    case AtomKind::lt:
    case AtomKind::le:
    case AtomKind::seq_eq: return 2;
    case AtomKind::add: return 3;
    case AtomKind::const_eq:
    case AtomKind::seq_const: return 1;
    }
    return 0;
}

Dfa RelationAtom::to_dfa(Radix radix) const
{
    if ((kind == AtomKind::seq_eq || kind == AtomKind::seq_const) && sequence == nullptr)
        throw Error(Errc::invalid_input, "sequence atom without a sequence");
    switch (kind) {
    case AtomKind::eq: return arith::eq_rel(radix);
    case AtomKind::lt: return arith::lt_rel(radix);
    case AtomKind::le: return arith::le_rel(radix);
    case AtomKind::add: return arith::add_rel(radix);
    case AtomKind::const_eq: return arith::const_rel(radix, constant);
    case AtomKind::seq_eq: return arith::seq_eq(*sequence);
    case AtomKind::seq_const:
        if (!constant.fits_sint_p())
            throw Error(Errc::invalid_input, "output symbol out of range");
        return arith::seq_const(*sequence, static_cast<int>(constant.get_si()));
    }
    throw Error(Errc::internal, "unknown atom kind");
}

}  // namespace critex
