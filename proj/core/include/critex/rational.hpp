#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace critex {

using BigInt = mpz_class;

/// Exact non-negative-or-signed fraction in lowest terms, extended with a
/// single unsigned infinity. Arithmetic is only defined on finite values.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
    Rational(BigInt num, BigInt den);

    static Rational infinite();
    static Rational parse(std::string_view text);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    /// "num/den" for finite values, "inf" otherwise.
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void reduce();

    BigInt num_;
    BigInt den_;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Mediant (a+b)/(c+d) of a/c and b/d.
Rational mediant(const Rational& lhs, const Rational& rhs);

}  // namespace critex
