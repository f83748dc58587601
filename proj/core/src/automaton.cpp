#include "critex/automaton.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "critex/error.hpp"

namespace critex {

std::size_t max_states()
{
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("CRITEX_MAX_STATES")) {
            try {
                const auto v = std::stoull(env);
                if (v > 0)
                    return static_cast<std::size_t>(v);
            } catch (const std::exception&) {
            }
        }
        return std::size_t{1000000};
    }();
    return limit;
}

namespace {

void check_limit(std::size_t states)
{
    if (states > max_states())
        throw Error(Errc::limit_exceeded, "intermediate automaton exceeds " +
                                              std::to_string(max_states()) + " states");
}

struct StateSetHash {
    std::size_t operator()(const std::vector<StateId>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto s : v) {
            h ^= s;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Radix radix, int tracks, DigitOrder order, StateId initial, std::vector<StateId> delta,
         std::vector<std::uint8_t> accepting, bool zero_invariant)
    : radix_(radix),
      tracks_(tracks),
      order_(order),
      sigma_(radix.tuple_alphabet_size(tracks)),
      initial_(initial),
      delta_(std::move(delta)),
      accepting_(std::move(accepting)),
      zero_invariant_(zero_invariant)
{
    if (tracks < 1)
        throw Error(Errc::invalid_input, "automaton needs at least one track");
    const auto n = accepting_.size();
    if (n == 0 || initial_ >= n)
        throw Error(Errc::invalid_input, "initial state out of range");
    if (delta_.size() != n * sigma_)
        throw Error(Errc::invalid_input, "transition table has wrong size");
    for (auto t : delta_)
        if (t >= n)
            throw Error(Errc::invalid_input, "transition target out of range");
}

Dfa Dfa::from_partial(Radix radix, int tracks, DigitOrder order, StateId initial,
                      std::vector<StateId> delta, std::vector<std::uint8_t> accepting,
                      bool zero_invariant)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    if (std::find(delta.begin(), delta.end(), kNoState) != delta.end()) {
        const auto dead = static_cast<StateId>(accepting.size());
        for (auto& t : delta)
            if (t == kNoState)
                t = dead;
        accepting.push_back(0);
        delta.insert(delta.end(), sigma, dead);
    }
    return Dfa(radix, tracks, order, initial, std::move(delta), std::move(accepting),
               zero_invariant);
}

Dfa Dfa::accept_all(Radix radix, int tracks, DigitOrder order)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    return Dfa(radix, tracks, order, 0, std::vector<StateId>(sigma, 0), {1}, true);
}

Dfa Dfa::accept_none(Radix radix, int tracks, DigitOrder order)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    return Dfa(radix, tracks, order, 0, std::vector<StateId>(sigma, 0), {0}, true);
}

void Dfa::check_word(const DigitWord& word) const
{
    if (!(word.radix() == radix_) || word.tracks() != tracks_ || word.order() != order_)
        throw Error(Errc::incompatible, "word does not match the automaton alphabet or order");
}

StateId Dfa::run(StateId from, const DigitWord& word) const
{
    check_word(word);
    StateId s = from;
    for (auto sym : word.symbols())
        s = next(s, sym);
    return s;
}

bool Dfa::accepts(const DigitWord& word) const
{
    return accepting(run(initial_, word));
}

bool Dfa::compatible_with(const Dfa& other) const noexcept
{
    return radix_ == other.radix_ && tracks_ == other.tracks_ && order_ == other.order_;
}

bool operator==(const Dfa& a, const Dfa& b)
{
    return a.compatible_with(b) && a.initial_ == b.initial_ && a.delta_ == b.delta_ &&
           a.accepting_ == b.accepting_;
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(Radix radix, int tracks, DigitOrder order, std::vector<StateId> initial,
         const std::vector<std::vector<StateId>>& successors, std::vector<std::uint8_t> accepting)
    : radix_(radix),
      tracks_(tracks),
      order_(order),
      sigma_(radix.tuple_alphabet_size(tracks)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting))
{
    const auto n = accepting_.size();
    if (successors.size() != n * sigma_)
        throw Error(Errc::invalid_input, "successor table has wrong size");
    offsets_.reserve(successors.size() + 1);
    offsets_.push_back(0);
    for (const auto& row : successors) {
        for (auto t : row) {
            if (t >= n)
                throw Error(Errc::invalid_input, "transition target out of range");
            targets_.push_back(t);
        }
        offsets_.push_back(targets_.size());
    }
    for (auto s : initial_)
        if (s >= n)
            throw Error(Errc::invalid_input, "initial state out of range");
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
}

bool Nfa::accepts(const DigitWord& word) const
{
    if (!(word.radix() == radix_) || word.tracks() != tracks_ || word.order() != order_)
        throw Error(Errc::incompatible, "word does not match the automaton alphabet or order");
    std::vector<std::uint8_t> cur(state_count(), 0);
    for (auto s : initial_)
        cur[s] = 1;
    for (auto sym : word.symbols()) {
        std::vector<std::uint8_t> nxt(state_count(), 0);
        for (StateId s = 0; s < state_count(); ++s)
            if (cur[s])
                for (auto t : next(s, sym))
                    nxt[t] = 1;
        cur.swap(nxt);
    }
    for (StateId s = 0; s < state_count(); ++s)
        if (cur[s] && accepting_[s])
            return true;
    return false;
}

Nfa Nfa::with_initial(std::vector<StateId> initial) const
{
    Nfa copy = *this;
    for (auto s : initial)
        if (s >= state_count())
            throw Error(Errc::invalid_input, "initial state out of range");
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
    copy.initial_ = std::move(initial);
    return copy;
}

Nfa Nfa::with_accepting(std::vector<std::uint8_t> accepting) const
{
    if (accepting.size() != state_count())
        throw Error(Errc::invalid_input, "accepting vector has wrong size");
    Nfa copy = *this;
    copy.accepting_ = std::move(accepting);
    return copy;
}

// ---------------------------------------------------------------------------
// Dfao

Dfao::Dfao(Radix radix, DigitOrder order, StateId initial, std::vector<StateId> delta,
           std::vector<int> output)
    : radix_(radix),
      order_(order),
      initial_(initial),
      delta_(std::move(delta)),
      output_(std::move(output))
{
    const auto n = output_.size();
    if (n == 0 || initial_ >= n)
        throw Error(Errc::invalid_input, "initial state out of range");
    if (delta_.size() != n * static_cast<std::size_t>(radix.base()))
        throw Error(Errc::invalid_input, "transition table has wrong size");
    for (auto t : delta_)
        if (t >= n)
            throw Error(Errc::invalid_input, "transition target out of range");
    for (auto o : output_)
        if (o < 0)
            throw Error(Errc::invalid_input, "output symbols must be non-negative");
}

std::vector<int> Dfao::output_alphabet() const
{
    std::vector<std::uint8_t> seen(state_count(), 0);
    std::vector<StateId> stack{initial_};
    seen[initial_] = 1;
    std::vector<int> out;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        out.push_back(output_[s]);
        for (int d = 0; d < base(); ++d) {
            const auto t = next(s, d);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Dfao::at(const BigInt& n) const
{
    auto word = encode(n, radix_);
    if (order_ == DigitOrder::lsd)
        word = word.reversed();
    StateId s = initial_;
    for (auto d : word.symbols())
        s = next(s, static_cast<int>(d));
    return output_[s];
}

int Dfao::at(std::uint64_t n) const
{
    const auto k = static_cast<std::uint64_t>(base());
    std::uint64_t digits[64];
    int len = 0;
    while (n > 0) {
        digits[len++] = n % k;
        n /= k;
    }
    StateId s = initial_;
    if (order_ == DigitOrder::msd)
        for (int i = len - 1; i >= 0; --i)
            s = next(s, static_cast<int>(digits[i]));
    else
        for (int i = 0; i < len; ++i)
            s = next(s, static_cast<int>(digits[i]));
    return output_[s];
}

bool Dfao::leading_zero_invariant() const
{
    const auto n = state_count();
    const auto k = static_cast<std::uint32_t>(base());
    std::vector<std::uint32_t> labels(output_.begin(), output_.end());
    if (order_ == DigitOrder::msd) {
        // init and delta(init, 0) must be Moore-equivalent.
        const auto blocks = refine_partition(n, k, delta_, labels);
        return blocks[initial_] == blocks[next(initial_, 0)];
    }
    // LSD: every reachable state must be equivalent to its 0-successor for
    // the purpose of output, i.e. output(delta(s, 0^i)) == output(s).
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<StateId> stack{initial_};
    seen[initial_] = 1;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        if (output_[next(s, 0)] != output_[s])
            return false;
        for (int d = 0; d < base(); ++d) {
            const auto t = next(s, d);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

Dfao Dfao::to_msd() const
{
    if (order_ == DigitOrder::msd)
        return *this;
    // Reading an MSD word w must yield output(delta(init, reverse(w))). Track
    // the map M_w : q -> delta(q, reverse(w)); M_{wa} = M_w o delta_a.
    const auto n = state_count();
    const auto k = base();
    using Map = std::vector<StateId>;
    std::vector<Map> maps;
    std::unordered_map<Map, StateId, StateSetHash> index;
    Map identity(n);
    std::iota(identity.begin(), identity.end(), StateId{0});
    maps.push_back(identity);
    index.emplace(identity, 0);
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (int d = 0; d < k; ++d) {
            Map m(n);
            for (StateId q = 0; q < n; ++q)
                m[q] = maps[i][next(q, d)];
            auto [it, inserted] = index.emplace(m, static_cast<StateId>(maps.size()));
            if (inserted) {
                maps.push_back(std::move(m));
                check_limit(maps.size());
            }
            delta.push_back(it->second);
        }
    }
    std::vector<int> out;
    out.reserve(maps.size());
    for (const auto& m : maps)
        out.push_back(output_[m[initial_]]);
    return minimize(Dfao(radix_, DigitOrder::msd, 0, std::move(delta), std::move(out)));
}

bool operator==(const Dfao& a, const Dfao& b)
{
    return a.radix_ == b.radix_ && a.order_ == b.order_ && a.initial_ == b.initial_ &&
           a.delta_ == b.delta_ && a.output_ == b.output_;
}

// ---------------------------------------------------------------------------
// Partition refinement (Hopcroft)

std::vector<std::uint32_t> refine_partition(std::size_t n, std::uint32_t sigma,
                                            const std::vector<StateId>& delta,
                                            const std::vector<std::uint32_t>& labels)
{
    // Predecessor lists indexed by (target, symbol).
    std::vector<std::size_t> inv_off(n * sigma + 1, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::uint32_t a = 0; a < sigma; ++a)
            ++inv_off[static_cast<std::size_t>(delta[s * sigma + a]) * sigma + a + 1];
    for (std::size_t i = 1; i < inv_off.size(); ++i)
        inv_off[i] += inv_off[i - 1];
    std::vector<StateId> inv_src(inv_off.back());
    {
        auto fill = inv_off;
        for (std::size_t s = 0; s < n; ++s)
            for (std::uint32_t a = 0; a < sigma; ++a)
                inv_src[fill[static_cast<std::size_t>(delta[s * sigma + a]) * sigma + a]++] =
                    static_cast<StateId>(s);
    }

    std::vector<StateId> elems(n);
    std::iota(elems.begin(), elems.end(), StateId{0});
    std::stable_sort(elems.begin(), elems.end(),
                     [&](StateId x, StateId y) { return labels[x] < labels[y]; });
    std::vector<std::size_t> pos(n);
    std::vector<std::uint32_t> block_of(n);
    std::vector<std::size_t> begin, end, marked;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || labels[elems[i]] != labels[elems[i - 1]]) {
            if (i)
                end.push_back(i);
            begin.push_back(i);
            marked.push_back(0);
        }
        pos[elems[i]] = i;
        block_of[elems[i]] = static_cast<std::uint32_t>(begin.size() - 1);
    }
    if (n)
        end.push_back(n);

    std::vector<std::uint8_t> in_work;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
    auto push_work = [&](std::uint32_t b, std::uint32_t a) {
        const auto idx = static_cast<std::size_t>(b) * sigma + a;
        if (in_work.size() <= idx)
            in_work.resize(std::max(idx + 1, in_work.size() * 2), 0);
        if (!in_work[idx]) {
            in_work[idx] = 1;
            work.emplace_back(b, a);
        }
    };
    auto is_in_work = [&](std::uint32_t b, std::uint32_t a) {
        const auto idx = static_cast<std::size_t>(b) * sigma + a;
        return idx < in_work.size() && in_work[idx];
    };
    {
        std::size_t largest = 0;
        for (std::size_t b = 1; b < begin.size(); ++b)
            if (end[b] - begin[b] > end[largest] - begin[largest])
                largest = b;
        for (std::size_t b = 0; b < begin.size(); ++b)
            if (b != largest)
                for (std::uint32_t a = 0; a < sigma; ++a)
                    push_work(static_cast<std::uint32_t>(b), a);
    }

    std::vector<std::uint8_t> is_marked(n, 0);
    std::vector<StateId> preds;
    std::vector<std::uint32_t> touched;
    while (!work.empty()) {
        const auto [splitter, a] = work.front();
        work.pop_front();
        in_work[static_cast<std::size_t>(splitter) * sigma + a] = 0;

        preds.clear();
        for (std::size_t i = begin[splitter]; i < end[splitter]; ++i) {
            const auto t = elems[i];
            const auto row = static_cast<std::size_t>(t) * sigma + a;
            for (std::size_t j = inv_off[row]; j < inv_off[row + 1]; ++j) {
                const auto s = inv_src[j];
                if (!is_marked[s]) {
                    is_marked[s] = 1;
                    preds.push_back(s);
                }
            }
        }
        touched.clear();
        for (auto s : preds) {
            const auto b = block_of[s];
            if (marked[b] == 0)
                touched.push_back(b);
            const auto target = begin[b] + marked[b];
            const auto p = pos[s];
            std::swap(elems[p], elems[target]);
            pos[elems[p]] = p;
            pos[elems[target]] = target;
            ++marked[b];
        }
        for (auto s : preds)
            is_marked[s] = 0;
        for (auto b : touched) {
            const auto m = marked[b];
            marked[b] = 0;
            if (m == end[b] - begin[b])
                continue;
            const auto nb = static_cast<std::uint32_t>(begin.size());
            begin.push_back(begin[b]);
            end.push_back(begin[b] + m);
            marked.push_back(0);
            begin[b] += m;
            for (std::size_t i = begin[nb]; i < end[nb]; ++i)
                block_of[elems[i]] = nb;
            const bool new_smaller = (end[nb] - begin[nb]) <= (end[b] - begin[b]);
            for (std::uint32_t c = 0; c < sigma; ++c) {
                if (is_in_work(b, c))
                    push_work(nb, c);
                else
                    push_work(new_smaller ? nb : b, c);
            }
        }
    }
    return block_of;
}

// ---------------------------------------------------------------------------
// Operations

Dfa product(const Dfa& a, const Dfa& b, BoolOp op)
{
    if (!a.compatible_with(b))
        throw Error(Errc::incompatible, "product of automata over different alphabets or orders");
    const auto sigma = a.alphabet_size();
    const auto nb = b.state_count();
    std::unordered_map<std::uint64_t, StateId> index;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto intern = [&](StateId x, StateId y) {
        const auto key = static_cast<std::uint64_t>(x) * nb + y;
        auto [it, inserted] = index.emplace(key, static_cast<StateId>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(x, y);
            check_limit(pairs.size());
        }
        return it->second;
    };
    intern(a.initial(), b.initial());
    std::vector<StateId> delta;
    std::vector<std::uint8_t> accepting;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [x, y] = pairs[i];
        for (std::uint32_t s = 0; s < sigma; ++s)
            delta.push_back(intern(a.next(x, s), b.next(y, s)));
        const bool acc = op == BoolOp::conjunction ? (a.accepting(x) && b.accepting(y))
                                                   : (a.accepting(x) || b.accepting(y));
        accepting.push_back(acc ? 1 : 0);
    }
    return Dfa(a.radix(), a.tracks(), a.order(), 0, std::move(delta), std::move(accepting),
               a.zero_invariant() && b.zero_invariant());
}

Dfa complement(const Dfa& a)
{
    auto acc = a.accepting_flags();
    for (auto& f : acc)
        f = f ? 0 : 1;
    return Dfa(a.radix(), a.tracks(), a.order(), a.initial(), a.transitions(), std::move(acc),
               a.zero_invariant());
}

Nfa to_nfa(const Dfa& a)
{
    const auto sigma = a.alphabet_size();
    std::vector<std::vector<StateId>> succ(a.state_count() * sigma);
    for (StateId s = 0; s < a.state_count(); ++s)
        for (std::uint32_t x = 0; x < sigma; ++x)
            succ[static_cast<std::size_t>(s) * sigma + x].push_back(a.next(s, x));
    return Nfa(a.radix(), a.tracks(), a.order(), {a.initial()}, succ, a.accepting_flags());
}

Nfa project(const Dfa& a, int drop_track)
{
    if (a.tracks() < 2)
        throw Error(Errc::out_of_range, "projection needs at least two tracks");
    if (drop_track < 0 || drop_track >= a.tracks())
        throw Error(Errc::out_of_range, "track index out of range");
    const int k = a.base();
    const auto sigma = a.alphabet_size();
    const auto new_sigma = a.radix().tuple_alphabet_size(a.tracks() - 1);
    std::uint32_t low_mod = 1;
    for (int t = 0; t < drop_track; ++t)
        low_mod *= static_cast<std::uint32_t>(k);
    std::vector<std::uint32_t> reduced(sigma);
    for (std::uint32_t x = 0; x < sigma; ++x) {
        const auto low = x % low_mod;
        const auto high = x / (low_mod * static_cast<std::uint32_t>(k));
        reduced[x] = high * low_mod + low;
    }
    std::vector<std::vector<StateId>> succ(a.state_count() * new_sigma);
    for (StateId s = 0; s < a.state_count(); ++s) {
        for (std::uint32_t x = 0; x < sigma; ++x) {
            auto& row = succ[static_cast<std::size_t>(s) * new_sigma + reduced[x]];
            const auto t = a.next(s, x);
            if (std::find(row.begin(), row.end(), t) == row.end())
                row.push_back(t);
        }
    }
    for (auto& row : succ)
        std::sort(row.begin(), row.end());
    return Nfa(a.radix(), a.tracks() - 1, a.order(), {a.initial()}, succ, a.accepting_flags());
}

Dfa determinize(const Nfa& a)
{
    const auto sigma = a.alphabet_size();
    const auto n = a.state_count();
    std::unordered_map<std::vector<StateId>, StateId, StateSetHash> index;
    std::vector<std::vector<StateId>> subsets;
    auto intern = [&](std::vector<StateId>&& set) {
        auto it = index.find(set);
        if (it != index.end())
            return it->second;
        const auto id = static_cast<StateId>(subsets.size());
        index.emplace(set, id);
        subsets.push_back(std::move(set));
        check_limit(subsets.size());
        return id;
    };
    intern(std::vector<StateId>(a.initial()));
    std::vector<StateId> delta;
    std::vector<std::uint8_t> accepting;
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t clock = 0;
    std::vector<StateId> buf;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        bool acc = false;
        for (auto s : subsets[i])
            acc = acc || a.accepting(s);
        accepting.push_back(acc ? 1 : 0);
        for (std::uint32_t x = 0; x < sigma; ++x) {
            ++clock;
            buf.clear();
            for (auto s : subsets[i])
                for (auto t : a.next(s, x))
                    if (stamp[t] != clock) {
                        stamp[t] = clock;
                        buf.push_back(t);
                    }
            std::sort(buf.begin(), buf.end());
            delta.push_back(intern(std::vector<StateId>(buf)));
        }
    }
    return Dfa(a.radix(), a.tracks(), a.order(), 0, std::move(delta), std::move(accepting));
}

namespace {

/// Breadth-first renumbering of the quotient of `a` by `block_of`, keeping
/// only classes reachable from the initial state.
template <class Accepting>
void canonical_quotient(std::size_t n, std::uint32_t sigma, StateId initial,
                        const std::vector<StateId>& delta,
                        const std::vector<std::uint32_t>& block_of, Accepting&& label_of,
                        std::vector<StateId>& out_delta, std::vector<StateId>& representative)
{
    std::uint32_t blocks = 0;
    for (std::size_t s = 0; s < n; ++s)
        blocks = std::max(blocks, block_of[s] + 1);
    std::vector<StateId> rep(blocks, kNoState);
    for (std::size_t s = 0; s < n; ++s)
        if (rep[block_of[s]] == kNoState)
            rep[block_of[s]] = static_cast<StateId>(s);
    std::vector<StateId> number(blocks, kNoState);
    representative.clear();
    number[block_of[initial]] = 0;
    representative.push_back(rep[block_of[initial]]);
    for (std::size_t i = 0; i < representative.size(); ++i) {
        const auto s = representative[i];
        for (std::uint32_t x = 0; x < sigma; ++x) {
            const auto b = block_of[delta[static_cast<std::size_t>(s) * sigma + x]];
            if (number[b] == kNoState) {
                number[b] = static_cast<StateId>(representative.size());
                representative.push_back(rep[b]);
            }
            out_delta.push_back(number[b]);
        }
    }
    (void)label_of;
}

}  // namespace

Dfa minimize(const Dfa& a)
{
    const auto sigma = a.alphabet_size();
    // Restrict to reachable states first.
    std::vector<StateId> order{a.initial()};
    std::vector<StateId> number(a.state_count(), kNoState);
    number[a.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::uint32_t x = 0; x < sigma; ++x) {
            const auto t = a.next(order[i], x);
            if (number[t] == kNoState) {
                number[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        }
    const auto n = order.size();
    std::vector<StateId> delta(n * sigma);
    std::vector<std::uint32_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t x = 0; x < sigma; ++x)
            delta[i * sigma + x] = number[a.next(order[i], x)];
        labels[i] = a.accepting(order[i]) ? 1 : 0;
    }
    const auto block_of = refine_partition(n, sigma, delta, labels);
    std::vector<StateId> out_delta;
    std::vector<StateId> reps;
    canonical_quotient(n, sigma, 0, delta, block_of, 0, out_delta, reps);
    std::vector<std::uint8_t> accepting;
    accepting.reserve(reps.size());
    for (auto r : reps)
        accepting.push_back(static_cast<std::uint8_t>(labels[r]));
    return Dfa(a.radix(), a.tracks(), a.order(), 0, std::move(out_delta), std::move(accepting),
               a.zero_invariant());
}

Dfao minimize(const Dfao& a)
{
    const auto k = static_cast<std::uint32_t>(a.base());
    std::vector<std::uint32_t> labels(a.outputs().begin(), a.outputs().end());
    const auto block_of = refine_partition(a.state_count(), k, a.transitions(), labels);
    std::vector<StateId> out_delta;
    std::vector<StateId> reps;
    canonical_quotient(a.state_count(), k, a.initial(), a.transitions(), block_of, 0, out_delta,
                       reps);
    std::vector<int> out;
    for (auto r : reps)
        out.push_back(a.output(r));
    return Dfao(a.radix(), a.order(), 0, std::move(out_delta), std::move(out));
}

Dfa reverse(const Dfa& a)
{
    const auto sigma = a.alphabet_size();
    const auto n = a.state_count();
    std::vector<std::vector<StateId>> succ(n * sigma);
    for (StateId s = 0; s < n; ++s)
        for (std::uint32_t x = 0; x < sigma; ++x)
            succ[static_cast<std::size_t>(a.next(s, x)) * sigma + x].push_back(s);
    std::vector<StateId> initial;
    for (StateId s = 0; s < n; ++s)
        if (a.accepting(s))
            initial.push_back(s);
    std::vector<std::uint8_t> accepting(n, 0);
    accepting[a.initial()] = 1;
    Nfa rev(a.radix(), a.tracks(), flipped(a.order()), std::move(initial), succ,
            std::move(accepting));
    auto out = minimize(determinize(rev));
    out.set_zero_invariant(a.zero_invariant());
    return out;
}

Nfa absorb_padding(const Nfa& a)
{
    const auto n = a.state_count();
    if (a.order() == DigitOrder::msd) {
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<StateId> stack(a.initial().begin(), a.initial().end());
        for (auto s : stack)
            seen[s] = 1;
        std::vector<StateId> closure;
        while (!stack.empty()) {
            const auto s = stack.back();
            stack.pop_back();
            closure.push_back(s);
            for (auto t : a.next(s, 0))
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
        }
        return a.with_initial(std::move(closure));
    }
    // LSD: a state accepts if some run of zero symbols reaches acceptance.
    std::vector<std::uint8_t> acc(n, 0);
    for (StateId s = 0; s < n; ++s)
        acc[s] = a.accepting(s) ? 1 : 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId s = 0; s < n; ++s) {
            if (acc[s])
                continue;
            for (auto t : a.next(s, 0))
                if (acc[t]) {
                    acc[s] = 1;
                    changed = true;
                    break;
                }
        }
    }
    return a.with_accepting(std::move(acc));
}

Dfa remap_tracks(const Dfa& a, int new_tracks, std::span<const int> placement)
{
    if (static_cast<int>(placement.size()) != a.tracks())
        throw Error(Errc::incompatible, "placement must name a target for every track");
    for (auto p : placement)
        if (p < 0 || p >= new_tracks)
            throw Error(Errc::out_of_range, "track placement out of range");
    const int k = a.base();
    const auto new_sigma = a.radix().tuple_alphabet_size(new_tracks);
    std::vector<std::uint32_t> old_symbol(new_sigma);
    for (std::uint32_t x = 0; x < new_sigma; ++x) {
        const auto digits = symbol_digits(x, new_tracks, k);
        std::uint32_t code = 0;
        for (std::size_t t = placement.size(); t-- > 0;)
            code = code * static_cast<std::uint32_t>(k) +
                   static_cast<std::uint32_t>(digits[static_cast<std::size_t>(placement[t])]);
        old_symbol[x] = code;
    }
    std::vector<StateId> delta;
    delta.reserve(a.state_count() * new_sigma);
    for (StateId s = 0; s < a.state_count(); ++s)
        for (std::uint32_t x = 0; x < new_sigma; ++x)
            delta.push_back(a.next(s, old_symbol[x]));
    return Dfa(a.radix(), new_tracks, a.order(), a.initial(), std::move(delta),
               a.accepting_flags(), a.zero_invariant());
}

std::optional<DigitWord> shortest_accepted(const Dfa& a)
{
    const auto n = a.state_count();
    std::vector<StateId> parent(n, kNoState);
    std::vector<std::uint32_t> via(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    std::deque<StateId> queue{a.initial()};
    seen[a.initial()] = 1;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        if (a.accepting(s)) {
            std::vector<std::uint32_t> symbols;
            for (auto cur = s; cur != a.initial(); cur = parent[cur])
                symbols.push_back(via[cur]);
            std::reverse(symbols.begin(), symbols.end());
            return DigitWord(a.radix(), a.tracks(), a.order(), std::move(symbols));
        }
        for (std::uint32_t x = 0; x < a.alphabet_size(); ++x) {
            const auto t = a.next(s, x);
            if (!seen[t]) {
                seen[t] = 1;
                parent[t] = s;
                via[t] = x;
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

bool is_empty(const Dfa& a)
{
    return !shortest_accepted(a).has_value();
}

std::vector<std::uint8_t> useful_states(const Dfa& a)
{
    const auto n = a.state_count();
    const auto sigma = a.alphabet_size();
    std::vector<std::uint8_t> reach(n, 0);
    std::vector<StateId> stack{a.initial()};
    reach[a.initial()] = 1;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (std::uint32_t x = 0; x < sigma; ++x) {
            const auto t = a.next(s, x);
            if (!reach[t]) {
                reach[t] = 1;
                stack.push_back(t);
            }
        }
    }
    std::vector<std::vector<StateId>> preds(n);
    for (StateId s = 0; s < n; ++s)
        for (std::uint32_t x = 0; x < sigma; ++x)
            preds[a.next(s, x)].push_back(s);
    std::vector<std::uint8_t> coreach(n, 0);
    for (StateId s = 0; s < n; ++s)
        if (a.accepting(s)) {
            coreach[s] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (auto p : preds[s])
            if (!coreach[p]) {
                coreach[p] = 1;
                stack.push_back(p);
            }
    }
    std::vector<std::uint8_t> useful(n, 0);
    for (StateId s = 0; s < n; ++s)
        useful[s] = reach[s] && coreach[s];
    return useful;
}

bool is_infinite(const Dfa& a)
{
    const auto useful = useful_states(a);
    const auto n = a.state_count();
    const auto sigma = a.alphabet_size();
    // Iterative DFS looking for a back edge inside the useful subgraph.
    std::vector<std::uint8_t> color(n, 0);
    for (StateId root = 0; root < n; ++root) {
        if (!useful[root] || color[root])
            continue;
        std::vector<std::pair<StateId, std::uint32_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [s, x] = stack.back();
            if (x == sigma) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            const auto t = a.next(s, x++);
            if (!useful[t])
                continue;
            if (color[t] == 1)
                return true;
            if (color[t] == 0) {
                color[t] = 1;
                stack.emplace_back(t, 0);
            }
        }
    }
    return false;
}

bool language_equal(const Dfa& a, const Dfa& b)
{
    if (!a.compatible_with(b))
        throw Error(Errc::incompatible, "comparing automata over different alphabets");
    auto ma = minimize(a);
    auto mb = minimize(b);
    ma.set_zero_invariant(false);
    mb.set_zero_invariant(false);
    return ma == mb;
}

Dfa canonicalize(const Dfa& a)
{
    if (a.order() != DigitOrder::msd)
        throw Error(Errc::incompatible, "canonicalize expects an MSD-first automaton");
    const auto sigma = a.alphabet_size();
    const auto n = static_cast<StateId>(a.state_count());
    // Fresh start state n; state n+1 is dead.
    std::vector<StateId> delta(a.transitions());
    std::vector<std::uint8_t> accepting(a.accepting_flags());
    for (std::uint32_t x = 0; x < sigma; ++x)
        delta.push_back(x == 0 ? n + 1 : a.next(a.initial(), x));
    accepting.push_back(a.accepting(a.initial()) ? 1 : 0);
    delta.insert(delta.end(), sigma, n + 1);
    accepting.push_back(0);
    Dfa raw(a.radix(), a.tracks(), a.order(), n, std::move(delta), std::move(accepting), false);
    auto out = minimize(raw);
    out.set_zero_invariant(false);
    return out;
}

Dfa zero_closure(const Dfa& a)
{
    if (a.order() != DigitOrder::msd)
        throw Error(Errc::incompatible, "zero_closure expects an MSD-first automaton");
    const auto strip = determinize(absorb_padding(to_nfa(a)));
    const auto sigma = strip.alphabet_size();
    const auto z = static_cast<StateId>(strip.state_count());
    std::vector<StateId> delta(strip.transitions());
    std::vector<std::uint8_t> accepting(strip.accepting_flags());
    for (std::uint32_t x = 0; x < sigma; ++x)
        delta.push_back(x == 0 ? z : strip.next(strip.initial(), x));
    accepting.push_back(strip.accepting(strip.initial()) ? 1 : 0);
    Dfa raw(a.radix(), a.tracks(), a.order(), z, std::move(delta), std::move(accepting), true);
    return minimize(raw);
}

void for_each_accepted(const Dfa& a, std::size_t max_len,
                       const std::function<bool(const DigitWord&)>& visit)
{
    const auto n = a.state_count();
    const auto sigma = a.alphabet_size();
    // ok[r][s]: some word of length exactly r leads from s to acceptance.
    std::vector<std::vector<std::uint8_t>> ok(max_len + 1, std::vector<std::uint8_t>(n, 0));
    for (StateId s = 0; s < n; ++s)
        ok[0][s] = a.accepting(s) ? 1 : 0;
    for (std::size_t r = 1; r <= max_len; ++r)
        for (StateId s = 0; s < n; ++s)
            for (std::uint32_t x = 0; x < sigma && !ok[r][s]; ++x)
                ok[r][s] = ok[r - 1][a.next(s, x)];
    std::vector<std::uint32_t> word;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (!ok[len][a.initial()])
            continue;
        word.assign(len, 0);
        // Iterative lexicographic DFS over words of exactly `len` symbols.
        std::vector<StateId> states(len + 1);
        states[0] = a.initial();
        std::size_t depth = 0;
        std::vector<std::uint32_t> next_sym(len + 1, 0);
        while (true) {
            if (depth == len) {
                if (!visit(DigitWord(a.radix(), a.tracks(), a.order(), word)))
                    return;
                if (depth == 0)
                    break;
                --depth;
                continue;
            }
            bool advanced = false;
            while (next_sym[depth] < sigma) {
                const auto x = next_sym[depth]++;
                const auto t = a.next(states[depth], x);
                if (ok[len - depth - 1][t]) {
                    word[depth] = x;
                    states[depth + 1] = t;
                    ++depth;
                    next_sym[depth] = 0;
                    advanced = true;
                    break;
                }
            }
            if (advanced)
                continue;
            if (depth == 0)
                break;
            --depth;
        }
    }
}

std::vector<DigitWord> enumerate_accepted(const Dfa& a, std::size_t max_len)
{
    std::vector<DigitWord> out;
    for_each_accepted(a, max_len, [&](const DigitWord& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

void for_each_pump(const Dfa& a, const std::function<bool(const PumpDecomposition&)>& visit)
{
    const auto useful = useful_states(a);
    if (!useful[a.initial()])
        return;
    const auto n = a.state_count();
    const auto sigma = a.alphabet_size();
    const auto radix = a.radix();
    const int tracks = a.tracks();
    std::vector<std::uint8_t> on_path(n, 0);
    std::vector<std::uint32_t> u_syms, v_syms;
    bool stop = false;

    auto emit = [&](StateId loop) {
        PumpDecomposition p{DigitWord(radix, tracks, a.order(), u_syms),
                            DigitWord(radix, tracks, a.order(), v_syms), loop, {}};
        const auto uv = p.u + p.v;
        p.increments.reserve(static_cast<std::size_t>(tracks));
        for (int t = 0; t < tracks; ++t)
            p.increments.push_back(decode_track(uv, t) - decode_track(p.u, t));
        if (!visit(p))
            stop = true;
    };

    // Simple cycles through `loop` avoiding states already on the u path.
    std::function<void(StateId, StateId)> cycles = [&](StateId loop, StateId s) {
        for (std::uint32_t x = 0; x < sigma && !stop; ++x) {
            const auto t = a.next(s, x);
            if (!useful[t])
                continue;
            if (t == loop) {
                v_syms.push_back(x);
                emit(loop);
                v_syms.pop_back();
                continue;
            }
            if (on_path[t])
                continue;
            on_path[t] = 1;
            v_syms.push_back(x);
            cycles(loop, t);
            v_syms.pop_back();
            on_path[t] = 0;
        }
    };
    std::function<void(StateId)> paths = [&](StateId s) {
        if (stop)
            return;
        cycles(s, s);
        for (std::uint32_t x = 0; x < sigma && !stop; ++x) {
            const auto t = a.next(s, x);
            if (!useful[t] || on_path[t])
                continue;
            on_path[t] = 1;
            u_syms.push_back(x);
            paths(t);
            u_syms.pop_back();
            on_path[t] = 0;
        }
    };
    on_path[a.initial()] = 1;
    paths(a.initial());
}

std::vector<PumpDecomposition> pump_decompositions(const Dfa& a)
{
    std::vector<PumpDecomposition> out;
    for_each_pump(a, [&](const PumpDecomposition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace critex
