#include "critex/oracle.hpp"

#include <map>
#include <string>

#include "critex/error.hpp"

namespace critex::oracle {

PrefixSample sequence_prefix(const Dfao& a, std::size_t n)
{
    PrefixSample s;
    s.source = &a;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        s.values.push_back(a.at(static_cast<std::uint64_t>(i)));
    return s;
}

RepetitionWitness scan_max_exponent(const PrefixSample& s, std::size_t max_period)
{
    if (max_period < 1)
        throw Error(Errc::out_of_range, "max_period must be at least 1");
    const auto& x = s.values;
    const auto n = x.size();
    RepetitionWitness best{Rational(0), 0, 0, 0};
    if (n == 0)
        return best;
    best = {Rational(1), 0, 1, 1};
    for (std::size_t p = 1; p <= max_period && p < n; ++p) {
        // Maximal runs of x[i] == x[i+p]; a run of m matches starting at i is
        // the factor x[i..i+m+p-1].
        std::size_t i = 0;
        while (i + p < n) {
            if (x[i] != x[i + p]) {
                ++i;
                continue;
            }
            std::size_t m = 0;
            while (i + m + p < n && x[i + m] == x[i + m + p])
                ++m;
            const Rational e(BigInt(static_cast<unsigned long>(m + p)),
                             BigInt(static_cast<unsigned long>(p)));
            if (e > best.exponent || (e == best.exponent && i < best.position))
                best = {e, i, m + p, p};
            i += m;
        }
    }
    return best;
}

Rational scan_ice(const PrefixSample& s)
{
    const auto& x = s.values;
    const auto n = x.size();
    if (n == 0)
        return Rational(0);
    // Failure function: border[l] = longest proper border of x[0..l-1].
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t l = 2; l <= n; ++l) {
        auto b = border[l - 1];
        while (b > 0 && x[b] != x[l - 1])
            b = border[b];
        border[l] = x[b] == x[l - 1] ? b + 1 : 0;
    }
    Rational best(1);
    for (std::size_t l = 1; l <= n; ++l) {
        const Rational e(BigInt(static_cast<unsigned long>(l)),
                         BigInt(static_cast<unsigned long>(l - border[l])));
        if (e > best)
            best = e;
    }
    return best;
}

Rational scan_recurrence(const PrefixSample& s, std::size_t max_len)
{
    if (max_len < 1)
        throw Error(Errc::out_of_range, "max_len must be at least 1");
    const auto& x = s.values;
    Rational best(0);
    for (std::size_t l = 1; l <= max_len && l <= x.size(); ++l) {
        std::map<std::vector<int>, std::size_t> last;
        std::size_t gap = 0;
        for (std::size_t i = 0; i + l <= x.size(); ++i) {
            std::vector<int> f(x.begin() + static_cast<std::ptrdiff_t>(i),
                               x.begin() + static_cast<std::ptrdiff_t>(i + l));
            auto [it, fresh] = last.try_emplace(std::move(f), i);
            if (!fresh) {
                gap = std::max(gap, i - it->second);
                it->second = i;
            }
        }
        const Rational r(BigInt(static_cast<unsigned long>(gap)),
                         BigInt(static_cast<unsigned long>(l)));
        if (r > best)
            best = r;
    }
    return best;
}

std::vector<std::pair<std::size_t, Rational>> brute_quo_profile(const Dfa& language,
                                                                std::size_t max_len)
{
    if (language.tracks() != 2)
        throw Error(Errc::incompatible, "quotient profile needs a two-track automaton");
    std::vector<std::pair<std::size_t, Rational>> out;
    for_each_accepted(language, max_len, [&](const DigitWord& w) {
        if (decode_track(w, 1) != 0)
            out.emplace_back(w.size(), quo(w));
        return true;
    });
    return out;
}

}  // namespace critex::oracle
