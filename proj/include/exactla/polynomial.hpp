#pragma once

#include <string>
#include <vector>

#include "exactla/rational.hpp"

namespace exactla {

/// Univariate polynomial with rational coefficients, stored dense in
/// ascending degree order: coefficients()[i] multiplies x^i. The highest
/// stored coefficient is never zero; the zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);

    static Polynomial constant(const Rational& c);
    /// c0 + c1*x
    static Polynomial linear(const Rational& c0, const Rational& c1);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t power) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    /// Divides by (x - root); the remainder is returned through `remainder`.
    Polynomial deflate(const Rational& root, Rational& remainder) const;

    /// Renders with the given variable name, highest degree first,
    /// e.g. "-x^3 + 2x^2 + x - 2".
    std::string to_string(const std::string& var = "x") const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

}  // namespace exactla
