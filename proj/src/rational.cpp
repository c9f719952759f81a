#include "exactla/rational.hpp"

#include <cctype>
#include <ostream>

#include "exactla/error.hpp"

namespace exactla {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void malformed(std::string_view text) {
    fail(ErrorCode::MalformedScalar, "malformed scalar '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) fail(ErrorCode::ZeroDenominator, "zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }

    mpz_class num;
    mpz_class den = 1;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto p = body.substr(0, slash);
        const auto q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) malformed(text);
        num = mpz_class(std::string(p));
        den = mpz_class(std::string(q));
        if (den == 0) fail(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) malformed(text);
        num = mpz_class(std::string(whole) + std::string(frac));
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!all_digits(body)) malformed(text);
        num = mpz_class(std::string(body));
    }
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::reciprocal() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace exactla
