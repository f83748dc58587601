#include "critex/numeral.hpp"

#include <algorithm>

#include "critex/error.hpp"

namespace critex {

DigitOrder flipped(DigitOrder order) noexcept
{
    return order == DigitOrder::msd ? DigitOrder::lsd : DigitOrder::msd;
}

const char* to_string(DigitOrder order) noexcept
{
    return order == DigitOrder::msd ? "msd" : "lsd";
}

Radix::Radix(int base) : base_(base)
{
    if (base < 2 || base > 255)
        throw Error(Errc::invalid_input, "base must lie in 2..255, got " + std::to_string(base));
}

std::uint32_t Radix::tuple_alphabet_size(int tracks) const
{
    std::uint64_t size = 1;
    for (int t = 0; t < tracks; ++t) {
        size *= static_cast<std::uint64_t>(base_);
        if (size > (1U << 24))
            throw Error(Errc::limit_exceeded, "tuple alphabet too large");
    }
    return static_cast<std::uint32_t>(size);
}

std::uint32_t symbol_code(std::span<const int> digits, int base)
{
    std::uint32_t code = 0;
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (digits[t] < 0 || digits[t] >= base)
            throw Error(Errc::invalid_digit, "digit " + std::to_string(digits[t]) +
                                                 " out of range for base " + std::to_string(base));
        code = code * static_cast<std::uint32_t>(base) + static_cast<std::uint32_t>(digits[t]);
    }
    return code;
}

int symbol_digit(std::uint32_t code, int track, int base)
{
    for (int t = 0; t < track; ++t)
        code /= static_cast<std::uint32_t>(base);
    return static_cast<int>(code % static_cast<std::uint32_t>(base));
}

std::vector<int> symbol_digits(std::uint32_t code, int tracks, int base)
{
    std::vector<int> out(static_cast<std::size_t>(tracks));
    for (int t = 0; t < tracks; ++t) {
        out[static_cast<std::size_t>(t)] = static_cast<int>(code % static_cast<std::uint32_t>(base));
        code /= static_cast<std::uint32_t>(base);
    }
    return out;
}

DigitWord::DigitWord(Radix radix, int tracks, DigitOrder order)
    : radix_(radix), tracks_(tracks), order_(order)
{
    if (tracks < 1)
        throw Error(Errc::invalid_input, "a digit word needs at least one track");
}

DigitWord::DigitWord(Radix radix, int tracks, DigitOrder order, std::vector<std::uint32_t> symbols)
    : DigitWord(radix, tracks, order)
{
    const auto sigma = radix.tuple_alphabet_size(tracks);
    for (auto s : symbols)
        if (s >= sigma)
            throw Error(Errc::invalid_digit, "symbol code out of range");
    symbols_ = std::move(symbols);
}

DigitWord DigitWord::from_tuples(Radix radix, DigitOrder order,
                                 const std::vector<std::vector<int>>& tuples)
{
    if (tuples.empty())
        throw Error(Errc::invalid_input, "from_tuples needs at least one tuple to fix the track count");
    DigitWord w(radix, static_cast<int>(tuples.front().size()), order);
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != w.tracks_)
            throw Error(Errc::invalid_input, "ragged tuple list");
        w.push_back_tuple(t);
    }
    return w;
}

DigitWord DigitWord::from_string(Radix radix, DigitOrder order, std::string_view digits)
{
    DigitWord w(radix, 1, order);
    for (char c : digits) {
        int d = -1;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'z')
            d = c - 'a' + 10;
        if (d < 0 || d >= radix.base())
            throw Error(Errc::invalid_digit, std::string("invalid digit '") + c + "'");
        w.symbols_.push_back(static_cast<std::uint32_t>(d));
    }
    return w;
}

int DigitWord::digit(std::size_t i, int track) const
{
    if (track < 0 || track >= tracks_)
        throw Error(Errc::out_of_range, "track index out of range");
    return symbol_digit(symbols_.at(i), track, radix_.base());
}

void DigitWord::push_back(std::uint32_t symbol)
{
    if (symbol >= radix_.tuple_alphabet_size(tracks_))
        throw Error(Errc::invalid_digit, "symbol code out of range");
    symbols_.push_back(symbol);
}

void DigitWord::push_back_tuple(std::span<const int> digits)
{
    if (static_cast<int>(digits.size()) != tracks_)
        throw Error(Errc::incompatible, "tuple width does not match track count");
    symbols_.push_back(symbol_code(digits, radix_.base()));
}

DigitWord DigitWord::track(int t) const
{
    if (t < 0 || t >= tracks_)
        throw Error(Errc::out_of_range, "track index out of range");
    DigitWord out(radix_, 1, order_);
    out.symbols_.reserve(symbols_.size());
    for (auto s : symbols_)
        out.symbols_.push_back(static_cast<std::uint32_t>(symbol_digit(s, t, radix_.base())));
    return out;
}

DigitWord DigitWord::reversed() const
{
    DigitWord out(radix_, tracks_, flipped(order_));
    out.symbols_.assign(symbols_.rbegin(), symbols_.rend());
    return out;
}

DigitWord DigitWord::operator+(const DigitWord& rhs) const
{
    if (!(radix_ == rhs.radix_) || tracks_ != rhs.tracks_ || order_ != rhs.order_)
        throw Error(Errc::incompatible, "concatenating incompatible digit words");
    DigitWord out = *this;
    out.symbols_.insert(out.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return out;
}

DigitWord DigitWord::repeated(std::size_t times) const
{
    DigitWord out(radix_, tracks_, order_);
    out.symbols_.reserve(symbols_.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        out.symbols_.insert(out.symbols_.end(), symbols_.begin(), symbols_.end());
    return out;
}

std::string DigitWord::to_string() const
{
    std::string out;
    const int k = radix_.base();
    auto put = [&](int d) {
        if (k <= 10)
            out += static_cast<char>('0' + d);
        else
            out += std::to_string(d);
    };
    for (auto s : symbols_) {
        if (tracks_ == 1) {
            if (k > 10 && !out.empty())
                out += ' ';
            put(static_cast<int>(s));
            continue;
        }
        out += '[';
        for (int t = 0; t < tracks_; ++t) {
            if (t)
                out += ',';
            out += std::to_string(symbol_digit(s, t, k));
        }
        out += ']';
    }
    return out;
}

bool operator==(const DigitWord& a, const DigitWord& b)
{
    return a.radix_ == b.radix_ && a.tracks_ == b.tracks_ && a.order_ == b.order_ &&
           a.symbols_ == b.symbols_;
}

DigitWord encode(const BigInt& n, Radix radix)
{
    if (n < 0)
        throw Error(Errc::invalid_input, "negative integers have no encoding");
    std::vector<std::uint32_t> lsd;
    BigInt v = n;
    const BigInt k = radix.base();
    while (v > 0) {
        BigInt r = v % k;
        lsd.push_back(static_cast<std::uint32_t>(r.get_ui()));
        v /= k;
    }
    std::reverse(lsd.begin(), lsd.end());
    return DigitWord(radix, 1, DigitOrder::msd, std::move(lsd));
}

BigInt decode_track(const DigitWord& word, int track)
{
    if (track < 0 || track >= word.tracks())
        throw Error(Errc::out_of_range, "track index out of range");
    const int k = word.radix().base();
    BigInt value = 0;
    const auto n = word.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i = word.order() == DigitOrder::msd ? j : n - 1 - j;
        value *= k;
        value += symbol_digit(word.symbol(i), track, k);
    }
    return value;
}

BigInt decode(const DigitWord& word)
{
    if (word.tracks() != 1)
        throw Error(Errc::incompatible, "decode expects a one-track word");
    return decode_track(word, 0);
}

DigitWord encode_tuple_padded(std::span<const BigInt> values, Radix radix, std::size_t length)
{
    std::vector<DigitWord> parts;
    parts.reserve(values.size());
    for (const auto& v : values) {
        parts.push_back(encode(v, radix));
        length = std::max(length, parts.back().size());
    }
    DigitWord out(radix, static_cast<int>(values.size()), DigitOrder::msd);
    std::vector<int> tuple(values.size());
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t t = 0; t < parts.size(); ++t) {
            const auto pad = length - parts[t].size();
            tuple[t] = i < pad ? 0 : static_cast<int>(parts[t].symbol(i - pad));
        }
        out.push_back_tuple(tuple);
    }
    return out;
}

DigitWord encode_tuple(std::span<const BigInt> values, Radix radix)
{
    return encode_tuple_padded(values, radix, 0);
}

DigitWord encode_pair(const BigInt& m, const BigInt& n, Radix radix)
{
    const BigInt values[] = {m, n};
    return encode_tuple(values, radix);
}

Rational quo(const DigitWord& word)
{
    if (word.tracks() != 2)
        throw Error(Errc::incompatible, "quo expects a two-track word");
    BigInt den = decode_track(word, 1);
    if (den == 0)
        throw Error(Errc::zero_denominator, "quo of a word whose second track is zero");
    return {decode_track(word, 0), std::move(den)};
}

}  // namespace critex
