#include "exactla/polynomial.hpp"

#include <algorithm>

namespace exactla {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
    // Horner
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::deflate(const Rational& root, Rational& remainder) const {
    if (coeffs_.empty()) {
        remainder = Rational{};
        return {};
    }
    std::vector<Rational> quotient(coeffs_.size() - 1);
    Rational carry;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        carry = carry * root + coeffs_[k];
        if (k > 0) quotient[k - 1] = carry;
    }
    remainder = carry;
    return Polynomial(std::move(quotient));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0 || !mag.is_one()) out += mag.to_string();
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
}

}  // namespace exactla
