#include "critex/quotient.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <future>
#include <thread>
#include <unordered_map>

#include "critex/arith.hpp"
#include "critex/error.hpp"
#include "critex/logic.hpp"

namespace critex {

const char* to_string(Relation rel) noexcept
{
    switch (rel) {
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::ne: return "!=";
    }
    return "?";
}

bool holds(int comparison, Relation rel) noexcept
{
    switch (rel) {
    case Relation::lt: return comparison < 0;
    case Relation::le: return comparison <= 0;
    case Relation::eq: return comparison == 0;
    case Relation::ge: return comparison >= 0;
    case Relation::gt: return comparison > 0;
    case Relation::ne: return comparison != 0;
    }
    return false;
}

namespace {

void require_pair_machine(const Dfa& a, const char* who)
{
    if (a.tracks() != 2 || a.order() != DigitOrder::msd)
        throw Error(Errc::incompatible, std::string(who) + " expects a two-track MSD automaton");
}

void require_threshold(const Comparator& c)
{
    if (c.threshold.is_infinite())
        throw Error(Errc::out_of_range, "comparator threshold must be finite");
    if (c.threshold.numerator() < 0)
        throw Error(Errc::out_of_range, "comparator threshold must be non-negative");
}

Rational ratio(const BigInt& a1, const BigInt& a2)
{
    if (a2 == 0) {
        if (a1 == 0)
            throw Error(Errc::undefined_gamma, "gamma undefined: both increments are zero");
        return Rational::infinite();
    }
    return Rational(a1, a2);
}

int digit1(std::uint32_t sym, int k) { return static_cast<int>(sym % static_cast<std::uint32_t>(k)); }
int digit2(std::uint32_t sym, int k) { return static_cast<int>(sym / static_cast<std::uint32_t>(k)); }

PumpDecomposition make_pump(const DigitWord& u, const DigitWord& v, StateId loop)
{
    PumpDecomposition p{u, v, loop, {}};
    const auto uv = u + v;
    for (int t = 0; t < 2; ++t)
        p.increments.push_back(decode_track(uv, t) - decode_track(u, t));
    return p;
}

DigitWord word_of(Radix radix, std::vector<std::uint32_t> symbols)
{
    return DigitWord(radix, 2, DigitOrder::msd, std::move(symbols));
}

/// Does some accepted word satisfy a*[pi_1] + b*[pi_2] > 0 (>= 0 if !strict)?
///
/// The MSD update V' = k V + a d1 + b d2 is clamped to [-max(a+ + b+, 1),
/// max(a- + b-, 1)] where a+, a- are the positive and negative parts: below
/// the floor the value can never climb back to 0, above the ceiling it can
/// never fall back, so the clamped map is monotone and keeps the sign.
bool threshold_exists(const Dfa& a, const BigInt& ca, const BigInt& cb, bool strict)
{
    const int k = a.base();
    const BigInt up = (ca > 0 ? BigInt(ca) : BigInt(0)) + (cb > 0 ? BigInt(cb) : BigInt(0));
    const BigInt down = (ca < 0 ? BigInt(-ca) : BigInt(0)) + (cb < 0 ? BigInt(-cb) : BigInt(0));
    const BigInt lo = -(up > 1 ? up : BigInt(1));
    const BigInt hi = down > 1 ? down : BigInt(1);
    const auto n = a.state_count();
    const auto sigma = a.alphabet_size();
    std::vector<BigInt> best(n);
    std::vector<std::uint8_t> seen(n, 0), queued(n, 0);
    std::deque<StateId> work;
    best[a.initial()] = 0;
    seen[a.initial()] = 1;
    work.push_back(a.initial());
    queued[a.initial()] = 1;
    BigInt v;
    while (!work.empty()) {
        const auto s = work.front();
        work.pop_front();
        queued[s] = 0;
        for (std::uint32_t sym = 0; sym < sigma; ++sym) {
            v = best[s] * k + ca * digit1(sym, k) + cb * digit2(sym, k);
            if (v < lo)
                v = lo;
            else if (v > hi)
                v = hi;
            const auto t = a.next(s, sym);
            if (!seen[t] || v > best[t]) {
                seen[t] = 1;
                best[t] = v;
                if (!queued[t]) {
                    queued[t] = 1;
                    work.push_back(t);
                }
            }
        }
    }
    for (StateId s = 0; s < n; ++s)
        if (seen[s] && a.accepting(s) && (strict ? best[s] > 0 : best[s] >= 0))
            return true;
    return false;
}

bool threshold_exists(const Dfa& a, const Comparator& c)
{
    const BigInt& p = c.threshold.numerator();
    const BigInt& q = c.threshold.denominator();
    // p1/p2 > P/Q  <=>  Q p1 - P p2 > 0
    switch (c.relation) {
    case Relation::gt: return threshold_exists(a, q, BigInt(-p), true);
    case Relation::ge: return threshold_exists(a, q, BigInt(-p), false);
    case Relation::lt: return threshold_exists(a, BigInt(-q), p, true);
    case Relation::le: return threshold_exists(a, BigInt(-q), p, false);
    case Relation::ne:
        return threshold_exists(a, q, BigInt(-p), true) || threshold_exists(a, BigInt(-q), p, true);
    case Relation::eq: break;
    }
    throw Error(Errc::internal, "threshold test does not cover equality");
}

std::int64_t to_i64(const BigInt& v)
{
    if (!v.fits_slong_p())
        throw Error(Errc::limit_exceeded, "threshold too large for an explicit comparator");
    return v.get_si();
}

/// Strongly connected component id per state (iterative Kosaraju).
std::vector<std::uint32_t> components(const Dfa& a)
{
    const auto n = static_cast<StateId>(a.state_count());
    const auto sigma = a.alphabet_size();
    std::vector<std::vector<StateId>> rev(n);
    for (StateId s = 0; s < n; ++s)
        for (std::uint32_t x = 0; x < sigma; ++x)
            rev[a.next(s, x)].push_back(s);
    std::vector<StateId> order;
    std::vector<std::uint8_t> done(n, 0);
    for (StateId root = 0; root < n; ++root) {
        if (done[root])
            continue;
        std::vector<std::pair<StateId, std::uint32_t>> stack{{root, 0}};
        done[root] = 1;
        while (!stack.empty()) {
            auto& [s, i] = stack.back();
            if (i < sigma) {
                const auto t = a.next(s, i++);
                if (!done[t]) {
                    done[t] = 1;
                    stack.emplace_back(t, 0);
                }
            } else {
                order.push_back(s);
                stack.pop_back();
            }
        }
    }
    constexpr auto unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> comp(n, unset);
    std::uint32_t next_id = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != unset)
            continue;
        std::vector<StateId> stack{*it};
        comp[*it] = next_id;
        while (!stack.empty()) {
            const auto s = stack.back();
            stack.pop_back();
            for (auto p : rev[s])
                if (comp[p] == unset) {
                    comp[p] = next_id;
                    stack.push_back(p);
                }
        }
        ++next_id;
    }
    return comp;
}

/// Max of D = x*[pi_1] - y*[pi_2] over words of each exact length, from one
/// source state, with back pointers.
struct Layers {
    std::vector<std::vector<BigInt>> value;
    std::vector<std::vector<std::uint8_t>> reached;
    std::vector<std::vector<std::pair<StateId, std::uint32_t>>> from;

    std::vector<std::uint32_t> path(std::size_t len, StateId s) const
    {
        std::vector<std::uint32_t> out(len);
        for (std::size_t l = len; l > 0; --l) {
            const auto [p, sym] = from[l][s];
            out[l - 1] = sym;
            s = p;
        }
        return out;
    }
};

/// Exact parametric search over the candidate set. S1 holds quotients of
/// accepted words shorter than n; pumps (u, v) are taken over every path u to
/// a state s and every closed walk v at s with |u| + |v| <= n, which contains
/// the first-repetition pumps and whose gamma values are all limits of
/// quotients in L.
class Parametric {
public:
    explicit Parametric(const Dfa& a)
        : a_(a),
          k_(a.base()),
          n_(a.state_count()),
          useful_(useful_states(a)),
          comp_(components(a))
    {
    }

    struct WordBest {
        bool found = false;
        BigInt score;
        std::size_t length = 0;
        StateId state = kNoState;
    };

    struct PumpBest {
        bool found = false;
        BigInt score;
        std::optional<PumpDecomposition> pump;
    };

    /// Best accepted word of length < n for threshold y/x.
    WordBest best_word(const BigInt& x, const BigInt& y)
    {
        prefix_ = layered(a_.initial(), n_ - 1, x, y, false);
        WordBest best;
        for (std::size_t l = 0; l < n_; ++l)
            for (StateId s = 0; s < n_; ++s)
                if (prefix_.reached[l][s] && a_.accepting(s) &&
                    (!best.found || prefix_.value[l][s] > best.score)) {
                    best.found = true;
                    best.score = prefix_.value[l][s];
                    best.length = l;
                    best.state = s;
                }
        return best;
    }

    DigitWord word(const WordBest& w) const
    {
        return word_of(a_.radix(), prefix_.path(w.length, w.state));
    }

    /// Shortest accepted word of length < n with score exactly 0, given the
    /// prefix table of the last best_word call.
    std::optional<DigitWord> shortest_zero() const
    {
        for (std::size_t l = 0; l < n_; ++l)
            for (StateId s = 0; s < n_; ++s)
                if (prefix_.reached[l][s] && a_.accepting(s) && prefix_.value[l][s] == 0)
                    return word_of(a_.radix(), prefix_.path(l, s));
        return std::nullopt;
    }

    /// Best pump for threshold y/x. Requires a preceding best_word call with
    /// the same coefficients (it reuses the prefix table).
    PumpBest best_pump(const BigInt& x, const BigInt& y)
    {
        PumpBest best;
        BigInt weight, score;
        for (StateId s = 0; s < n_; ++s) {
            if (!useful_[s])
                continue;
            // Best prefix of length <= m ending at s, for every m.
            std::vector<std::size_t> arg(n_, n_);
            for (std::size_t m = 0; m < n_; ++m) {
                arg[m] = m > 0 ? arg[m - 1] : n_;
                if (prefix_.reached[m][s] &&
                    (arg[m] == n_ || prefix_.value[m][s] > prefix_.value[arg[m]][s]))
                    arg[m] = m;
            }
            const auto cyc = layered(s, n_, x, y, true);
            weight = 1;
            for (std::size_t r = 1; r <= n_; ++r) {
                weight *= k_;
                if (!cyc.reached[r][s] || arg[n_ - r] == n_)
                    continue;
                const auto a = arg[n_ - r];
                score = (weight - 1) * prefix_.value[a][s] + cyc.value[r][s];
                if (!best.found || score > best.score) {
                    best.found = true;
                    best.score = score;
                    best.pump = make_pump(word_of(a_.radix(), prefix_.path(a, s)),
                                          word_of(a_.radix(), cyc.path(r, s)), s);
                }
            }
        }
        return best;
    }

private:
    Layers layered(StateId src, std::size_t len, const BigInt& x, const BigInt& y,
                   bool within_component) const
    {
        const auto sigma = a_.alphabet_size();
        Layers t;
        t.value.assign(len + 1, std::vector<BigInt>(n_));
        t.reached.assign(len + 1, std::vector<std::uint8_t>(n_, 0));
        t.from.assign(len + 1, std::vector<std::pair<StateId, std::uint32_t>>(n_, {kNoState, 0}));
        t.reached[0][src] = 1;
        t.value[0][src] = 0;
        BigInt v;
        for (std::size_t l = 0; l < len; ++l)
            for (StateId s = 0; s < n_; ++s) {
                if (!t.reached[l][s])
                    continue;
                for (std::uint32_t sym = 0; sym < sigma; ++sym) {
                    const auto d = a_.next(s, sym);
                    if (within_component && comp_[d] != comp_[src])
                        continue;
                    v = t.value[l][s] * k_ + x * digit1(sym, k_) - y * digit2(sym, k_);
                    if (!t.reached[l + 1][d] || v > t.value[l + 1][d]) {
                        t.reached[l + 1][d] = 1;
                        t.value[l + 1][d] = v;
                        t.from[l + 1][d] = {s, sym};
                    }
                }
            }
        return t;
    }

    const Dfa& a_;
    int k_;
    std::size_t n_;
    std::vector<std::uint8_t> useful_;
    std::vector<std::uint32_t> comp_;
    Layers prefix_;
};

Rational pump_ratio(const PumpDecomposition& p) { return ratio(p.increments[0], p.increments[1]); }

/// Pump with zero second-track increment, searched structurally: a useful
/// state reachable through symbols with second digit 0 that lies on a cycle
/// of such symbols.
std::optional<PumpDecomposition> unbounded_pump(const Dfa& a)
{
    const int k = a.base();
    const auto n = static_cast<StateId>(a.state_count());
    const auto useful = useful_states(a);
    if (!useful[a.initial()])
        return std::nullopt;
    auto bfs = [&](StateId src) {
        std::vector<std::pair<StateId, std::uint32_t>> from(n, {kNoState, 0});
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<StateId> order{src};
        seen[src] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::uint32_t sym = 0; sym < static_cast<std::uint32_t>(k); ++sym) {
                const auto t = a.next(order[i], sym);
                if (useful[t] && !seen[t]) {
                    seen[t] = 1;
                    from[t] = {order[i], sym};
                    order.push_back(t);
                }
            }
        return std::make_tuple(order, from, seen);
    };
    auto trace = [&](const std::vector<std::pair<StateId, std::uint32_t>>& from, StateId src,
                     StateId s) {
        std::vector<std::uint32_t> syms;
        while (s != src) {
            syms.push_back(from[s].second);
            s = from[s].first;
        }
        std::reverse(syms.begin(), syms.end());
        return syms;
    };
    const auto [order, from, seen] = bfs(a.initial());
    for (auto s : order)
        for (std::uint32_t sym = 0; sym < static_cast<std::uint32_t>(k); ++sym) {
            // Closed walk at s: one step to t, then back.
            const auto t = a.next(s, sym);
            if (!useful[t])
                continue;
            const auto [o2, f2, s2] = bfs(t);
            if (!s2[s])
                continue;
            auto v = trace(f2, t, s);
            v.insert(v.begin(), sym);
            auto p = make_pump(word_of(a.radix(), trace(from, a.initial(), s)),
                               word_of(a.radix(), std::move(v)), s);
            if (p.increments[1] != 0 || p.increments[0] <= 0)
                throw Error(Errc::internal, "unbounded pump has wrong increments");
            return p;
        }
    return std::nullopt;
}

}  // namespace

Rational gamma(const DigitWord& u, const DigitWord& v)
{
    if (v.empty())
        throw Error(Errc::out_of_range, "gamma needs a nonempty pumped factor");
    if (u.tracks() != 2 || v.tracks() != 2)
        throw Error(Errc::incompatible, "gamma expects two-track words");
    const auto uv = u + v;
    return ratio(decode_track(uv, 0) - decode_track(u, 0), decode_track(uv, 1) - decode_track(u, 1));
}

Dfa nonzero_denominator(Radix radix)
{
    const auto k = static_cast<std::uint32_t>(radix.base());
    const auto sigma = radix.tuple_alphabet_size(2);
    std::vector<StateId> delta(2 * sigma);
    for (std::uint32_t sym = 0; sym < sigma; ++sym) {
        delta[sym] = sym / k == 0 ? 0 : 1;
        delta[sigma + sym] = 1;
    }
    return Dfa(radix, 2, DigitOrder::msd, 0, std::move(delta), {0, 1}, true);
}

Dfa prepare_quotient_language(const Dfa& language)
{
    require_pair_machine(language, "quotient solver");
    return canonicalize(
        minimize(product(language, nonzero_denominator(language.radix()), BoolOp::conjunction)));
}

Dfa comparator_dfa(const Comparator& c)
{
    require_threshold(c);
    const auto& P = c.threshold.numerator();
    const auto& Q = c.threshold.denominator();
    const BigInt H = P > 1 ? P : BigInt(1);
    if (BigInt(Q * H * 3) > BigInt(static_cast<unsigned long>(max_states())))
        throw Error(Errc::limit_exceeded, "comparator for " + c.threshold.to_string() +
                                              " exceeds the state limit");
    const auto p = static_cast<std::uint64_t>(to_i64(P));
    const auto q = static_cast<std::uint64_t>(to_i64(Q));
    const auto h = static_cast<std::uint64_t>(to_i64(H));
    const auto k = static_cast<std::uint64_t>(c.radix.base());
    const auto sigma = c.radix.tuple_alphabet_size(2);

    // State (carry of p*Q, carry of q*P, verdict in {<,=,>} as 0,1,2).
    auto key = [&](std::uint64_t c1, std::uint64_t c2, std::uint64_t v) {
        return (c1 * h + c2) * 3 + v;
    };
    std::unordered_map<std::uint64_t, StateId> id;
    std::vector<std::array<std::uint64_t, 3>> states;
    auto intern = [&](std::uint64_t c1, std::uint64_t c2, std::uint64_t v) {
        auto [it, fresh] = id.emplace(key(c1, c2, v), static_cast<StateId>(states.size()));
        if (fresh)
            states.push_back({c1, c2, v});
        return it->second;
    };
    intern(0, 0, 1);
    std::vector<StateId> delta;
    std::vector<std::uint8_t> accepting;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [c1, c2, v] = states[i];
        for (std::uint32_t sym = 0; sym < sigma; ++sym) {
            const std::uint64_t x = (sym % k) * q + c1;
            const std::uint64_t y = (sym / k) * p + c2;
            const auto o1 = x % k, o2 = y % k;
            const std::uint64_t w = o1 > o2 ? 2 : o1 < o2 ? 0 : v;
            delta.push_back(intern(x / k, y / k, w));
        }
        // Remaining carries are the most significant part of p*Q and q*P.
        const int cmp = c1 > c2 ? 1 : c1 < c2 ? -1 : static_cast<int>(v) - 1;
        accepting.push_back(holds(cmp, c.relation) ? 1 : 0);
    }
    Dfa lsd(c.radix, 2, DigitOrder::lsd, 0, std::move(delta), std::move(accepting), true);
    auto msd = reverse(lsd);
    msd.set_zero_invariant(true);
    return msd;
}

bool meets(const Dfa& language, const Comparator& c)
{
    require_pair_machine(language, "meets");
    require_threshold(c);
    const auto nz = minimize(
        product(language, nonzero_denominator(language.radix()), BoolOp::conjunction));
    if (c.relation == Relation::eq)
        return find_meeting_word(nz, c).has_value();
    return threshold_exists(nz, c);
}

std::optional<DigitWord> find_meeting_word(const Dfa& language, const Comparator& c)
{
    require_pair_machine(language, "find_meeting_word");
    require_threshold(c);
    const auto a = minimize(
        product(language, nonzero_denominator(language.radix()), BoolOp::conjunction));
    const auto P = to_i64(c.threshold.numerator());
    const auto Q = to_i64(c.threshold.denominator());
    // V = Q*p - P*q, clamped as in threshold_exists.
    const std::int64_t lo = -std::max<std::int64_t>(Q, 1);
    const std::int64_t hi = std::max<std::int64_t>(P, 1);
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    if (static_cast<double>(width) * static_cast<double>(a.state_count()) >
        static_cast<double>(max_states()) * 64.0)
        throw Error(Errc::limit_exceeded, "comparator search space too large");
    const int k = a.base();
    const auto sigma = a.alphabet_size();
    auto key = [&](StateId s, std::int64_t v) {
        return static_cast<std::uint64_t>(s) * width + static_cast<std::uint64_t>(v - lo);
    };
    struct Node {
        StateId s;
        std::int64_t v;
    };
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint32_t>> from;
    std::vector<Node> order{{a.initial(), 0}};
    const auto root = key(a.initial(), 0);
    from.emplace(root, std::make_pair(root, 0U));
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto [s, v] = order[i];
        const int sign = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (a.accepting(s) && holds(sign, c.relation)) {
            std::vector<std::uint32_t> syms;
            auto cur = key(s, v);
            while (cur != root) {
                const auto& [prev, sym] = from.at(cur);
                syms.push_back(sym);
                cur = prev;
            }
            std::reverse(syms.begin(), syms.end());
            return word_of(a.radix(), std::move(syms));
        }
        for (std::uint32_t sym = 0; sym < sigma; ++sym) {
            std::int64_t w = v * k + Q * digit1(sym, k) - P * digit2(sym, k);
            w = std::clamp(w, lo, hi);
            const auto t = a.next(s, sym);
            if (from.emplace(key(t, w), std::make_pair(key(s, v), sym)).second)
                order.push_back({t, w});
        }
    }
    return std::nullopt;
}

InfiniteSupTest is_sup_infinite(const Dfa& language)
{
    const auto a = prepare_quotient_language(language);
    if (is_empty(a))
        return {};
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(a.base()), a.state_count());
    const bool infinite = threshold_exists(a, BigInt(1), BigInt(-bound), false);
    auto pump = unbounded_pump(a);
    if (infinite != pump.has_value())
        throw Error(Errc::internal, "threshold test and pump search disagree on unboundedness");
    return {infinite, std::move(pump)};
}

CandidateSet candidates(const Dfa& language, std::size_t budget)
{
    const auto a = prepare_quotient_language(language);
    CandidateSet out;
    if (is_empty(a))
        return out;
    const auto n = a.state_count();
    std::size_t seen = 0;
    for_each_accepted(a, n - 1, [&](const DigitWord& w) {
        if (++seen > budget)
            throw Error(Errc::limit_exceeded, "candidate enumeration exceeds budget");
        out.s1.push_back(quo(w));
        return true;
    });
    std::sort(out.s1.begin(), out.s1.end());
    out.s1.erase(std::unique(out.s1.begin(), out.s1.end()), out.s1.end());

    seen = 0;
    std::vector<std::pair<Rational, PumpDecomposition>> finite;
    for_each_pump(a, [&](const PumpDecomposition& p) {
        if (++seen > budget)
            throw Error(Errc::limit_exceeded, "pump enumeration exceeds budget");
        const auto g = pump_ratio(p);
        if (g.is_infinite())
            out.infinite_pumps.push_back(p);
        else
            finite.emplace_back(g, p);
        return true;
    });
    std::stable_sort(finite.begin(), finite.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [g, p] : finite) {
        if (!out.s2.empty() && out.s2.back() == g)
            continue;
        out.s2.push_back(g);
        out.s2_pumps.push_back(std::move(p));
    }
    return out;
}

Rational min_qualifying_candidate(const Dfa& language, const CandidateSet& cands,
                                  unsigned threads)
{
    const auto a = prepare_quotient_language(language);
    std::vector<Rational> all(cands.s1);
    all.insert(all.end(), cands.s2.begin(), cands.s2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto qualifies = [&](const Rational& beta) {
        const auto above = comparator_dfa({beta, Relation::gt, a.radix()});
        return is_empty(product(a, above, BoolOp::conjunction));
    };
    // Qualification is upward closed, so search for the first qualifying
    // candidate, probing `threads` points of the open range per round.
    const unsigned width = std::max(threads, 1U);
    std::size_t lo = 0, hi = all.size();  // answer index lies in [lo, hi]
    while (lo < hi) {
        const std::size_t span = hi - lo;
        const std::size_t probes = std::min<std::size_t>(width, span);
        std::vector<std::size_t> at(probes);
        for (std::size_t i = 0; i < probes; ++i)
            at[i] = lo + (span * (i + 1)) / (probes + 1);
        std::vector<std::uint8_t> verdict(probes, 0);
        if (probes == 1) {
            verdict[0] = qualifies(all[at[0]]) ? 1 : 0;
        } else {
            std::vector<std::future<void>> jobs;
            for (std::size_t i = 0; i < probes; ++i)
                jobs.push_back(std::async(std::launch::async, [&, i] {
                    verdict[i] = qualifies(all[at[i]]) ? 1 : 0;
                }));
            for (auto& j : jobs)
                j.get();
        }
        std::size_t new_lo = lo, new_hi = hi;
        for (std::size_t i = 0; i < probes; ++i) {
            if (verdict[i]) {
                new_hi = at[i];
                break;
            }
            new_lo = at[i] + 1;
        }
        lo = new_lo;
        hi = new_hi;
    }
    return lo < all.size() ? all[lo] : Rational::infinite();
}

SupResult sup_quo(const Dfa& language)
{
    const auto a = prepare_quotient_language(language);
    if (is_empty(a))
        throw Error(Errc::empty_language, "no supremum: no word with nonzero denominator");
    if (auto inf = is_sup_infinite(a); inf.infinite)
        return {Rational::infinite(), false, std::nullopt, std::move(inf.pump)};

    Parametric search(a);
    Rational beta = quo(*shortest_accepted(a));
    for (;;) {
        const auto& x = beta.denominator();
        const auto& y = beta.numerator();
        const auto w = search.best_word(x, y);
        const auto p = search.best_pump(x, y);
        const bool pump_wins = p.found && (!w.found || p.score > w.score);
        const BigInt& top = pump_wins ? p.score : w.score;
        if (top <= 0) {
            SupResult r{beta, w.score == 0, std::nullopt, std::nullopt};
            if (r.attained)
                r.word = search.shortest_zero();
            else if (p.found && p.score == 0)
                r.pump = p.pump;
            else
                throw Error(Errc::internal, "supremum not realised by any candidate");
            if (threshold_exists(a, x, BigInt(-y), true))
                throw Error(Errc::internal, "supremum certificate failed");
            return r;
        }
        beta = pump_wins ? pump_ratio(*p.pump) : quo(search.word(w));
    }
}

SupResult largest_special_point(const Dfa& language)
{
    const auto a = prepare_quotient_language(language);
    if (!is_infinite(a))
        throw Error(Errc::finite_language, "no special point: the language is finite");
    if (auto inf = is_sup_infinite(a); inf.infinite)
        return {Rational::infinite(), false, std::nullopt, std::move(inf.pump)};

    Parametric search(a);
    search.best_word(BigInt(1), BigInt(0));
    auto p = search.best_pump(BigInt(1), BigInt(0));
    if (!p.found)
        throw Error(Errc::internal, "infinite language without a pump");
    Rational beta = pump_ratio(*p.pump);
    for (;;) {
        const auto& x = beta.denominator();
        const auto& y = beta.numerator();
        search.best_word(x, y);
        p = search.best_pump(x, y);
        if (p.score <= 0)
            return {beta, false, std::nullopt, std::move(*p.pump)};
        beta = pump_ratio(*p.pump);
    }
}

ClosureReport check_pair_closure(const Dfa& language)
{
    require_pair_machine(language, "check_pair_closure");
    const auto radix = language.radix();
    ClosureReport r;

    const auto after_zero = language.next(language.initial(), 0);
    r.no_leading_zero = !useful_states(language)[after_zero];

    const auto z = zero_closure(language);
    const auto below = product(z, comparator_dfa({Rational(1), Relation::lt, radix}),
                               BoolOp::conjunction);
    r.counterexample_c = shortest_accepted(below);
    r.numerator_dominates = !r.counterexample_c.has_value();

    // Tracks (p, q, p'): (p,q) in L, p > q, p' + 1 = p, (p', q) not in L.
    const int pq[] = {0, 1};
    const int qp[] = {1, 0};
    const int pdash_q[] = {2, 1};
    const int p_pdash[] = {0, 2};
    logic::CompilationEnv env{radix, {"p", "d"}, nullptr};
    const auto decrement = logic::compile(*logic::parse("d + 1 = p"), env);
    auto m = remap_tracks(z, 3, pq);
    m = product(m, remap_tracks(arith::lt_rel(radix), 3, qp), BoolOp::conjunction);
    m = product(m, remap_tracks(decrement, 3, p_pdash), BoolOp::conjunction);
    m = minimize(product(m, remap_tracks(complement(z), 3, pdash_q), BoolOp::conjunction));
    if (auto w = shortest_accepted(m)) {
        DigitWord pair(radix, 2, DigitOrder::msd);
        for (std::size_t i = 0; i < w->size(); ++i) {
            const int d[] = {w->digit(i, 0), w->digit(i, 1)};
            if (pair.empty() && d[0] == 0 && d[1] == 0)
                continue;
            pair.push_back_tuple(d);
        }
        r.counterexample_d = std::move(pair);
    }
    r.decrement_closed = !r.counterexample_d.has_value();
    return r;
}

}  // namespace critex
