#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace exactla {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
///
/// Text syntax (shared by every parser and renderer in the library):
///   integer   -?[0-9]+
///   fraction  -?[0-9]+/[0-9]+      (denominator must be nonzero)
///   decimal   -?[0-9]+.[0-9]+      (converted exactly)
/// Rendering prints integers without "/1" and fractions as "p/q".
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational reciprocal() const;
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational pow(long exponent) const;

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational parse_scalar(std::string_view text) { return Rational::parse(text); }

}  // namespace exactla
