#include "critex/rational.hpp"

#include <ostream>

#include "critex/error.hpp"

namespace critex {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0)
        throw Error(Errc::zero_denominator, "rational with zero denominator");
    reduce();
}

Rational Rational::infinite()
{
    Rational r;
    r.infinite_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
}

Rational Rational::parse(std::string_view text)
{
    if (text == "inf")
        return infinite();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)), BigInt(1));
        return Rational(BigInt(std::string(text.substr(0, slash))),
                        BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
        throw Error(Errc::invalid_input, "malformed rational '" + std::string(text) + "'");
    }
}

void Rational::reduce()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::string Rational::to_string() const
{
    if (infinite_)
        return "inf";
    return num_.get_str() + "/" + den_.get_str();
}

namespace {

void require_finite(const Rational& a, const Rational& b)
{
    if (a.is_infinite() || b.is_infinite())
        throw Error(Errc::internal, "arithmetic on infinite rational");
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b)
{
    require_finite(a, b);
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b)
{
    require_finite(a, b);
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b)
{
    require_finite(a, b);
    return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b)
{
    require_finite(a, b);
    if (b.num_ == 0)
        throw Error(Errc::zero_denominator, "division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const Rational& a, const Rational& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ == b.infinite_)
            return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational mediant(const Rational& lhs, const Rational& rhs)
{
    if (lhs.is_infinite() || rhs.is_infinite())
        throw Error(Errc::internal, "mediant of infinite rational");
    return {lhs.numerator() + rhs.numerator(), lhs.denominator() + rhs.denominator()};
}

}  // namespace critex
