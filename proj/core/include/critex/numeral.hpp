#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "critex/rational.hpp"

namespace critex {

enum class DigitOrder : std::uint8_t { msd, lsd };

DigitOrder flipped(DigitOrder order) noexcept;
const char* to_string(DigitOrder order) noexcept;

/// The numeration base k and its digit alphabet {0, ..., k-1}.
class Radix {
public:
    explicit Radix(int base);

    int base() const noexcept { return base_; }
    int alphabet_size() const noexcept { return base_; }

    /// Number of d-tuple symbols, k^d.
    std::uint32_t tuple_alphabet_size(int tracks) const;

    friend bool operator==(Radix a, Radix b) noexcept { return a.base_ == b.base_; }

private:
    int base_;
};

/// Symbols over the tuple alphabet are coded as sum_t digit[t] * k^t.
std::uint32_t symbol_code(std::span<const int> digits, int base);
int symbol_digit(std::uint32_t code, int track, int base);
std::vector<int> symbol_digits(std::uint32_t code, int tracks, int base);

/// A finite word over Sigma_k^d together with the significance order of its
/// digits. Symbols are stored as codes (see symbol_code).
class DigitWord {
public:
    DigitWord(Radix radix, int tracks, DigitOrder order);
    DigitWord(Radix radix, int tracks, DigitOrder order, std::vector<std::uint32_t> symbols);

    /// Builds a word from per-symbol digit tuples, e.g. {{1,0},{0,1}}.
    static DigitWord from_tuples(Radix radix, DigitOrder order,
                                 const std::vector<std::vector<int>>& tuples);
    /// Builds a one-track word from a digit string such as "101011".
    static DigitWord from_string(Radix radix, DigitOrder order, std::string_view digits);

    Radix radix() const noexcept { return radix_; }
    int tracks() const noexcept { return tracks_; }
    DigitOrder order() const noexcept { return order_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    std::uint32_t symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::uint32_t>& symbols() const noexcept { return symbols_; }
    int digit(std::size_t i, int track) const;

    void push_back(std::uint32_t symbol);
    void push_back_tuple(std::span<const int> digits);

    /// Projection onto a single track (pi_t), same order.
    DigitWord track(int t) const;
    /// Reversed symbol sequence with the order marker flipped.
    DigitWord reversed() const;
    /// Concatenation; both operands must share radix, tracks and order.
    DigitWord operator+(const DigitWord& rhs) const;
    DigitWord repeated(std::size_t times) const;

    /// "101011" for one track, "[1,0][0,1]" otherwise.
    std::string to_string() const;

    friend bool operator==(const DigitWord& a, const DigitWord& b);

private:
    Radix radix_;
    int tracks_;
    DigitOrder order_;
    std::vector<std::uint32_t> symbols_;
};

/// Canonical MSD-first base-k representation; 0 encodes to the empty word.
DigitWord encode(const BigInt& n, Radix radix);
/// Value of a one-track word in its declared digit order.
BigInt decode(const DigitWord& word);
/// Value of track t of a multi-track word.
BigInt decode_track(const DigitWord& word, int track);

/// Canonical MSD-first encoding of a tuple, shorter entries padded with
/// leading zeros; never starts with the all-zero symbol.
DigitWord encode_tuple(std::span<const BigInt> values, Radix radix);
DigitWord encode_pair(const BigInt& m, const BigInt& n, Radix radix);
/// Same as encode_tuple but padded to at least `length` symbols.
DigitWord encode_tuple_padded(std::span<const BigInt> values, Radix radix, std::size_t length);

/// quo_k(w) = [pi_1(w)]_k / [pi_2(w)]_k for a two-track word.
Rational quo(const DigitWord& word);

}  // namespace critex
