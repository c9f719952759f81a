#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exactla/polynomial.hpp"
#include "exactla/vector_space.hpp"

namespace exactla {

// det(A - t I), leading coefficient (-1)^n.
Polynomial char_poly(const Matrix& a);

struct Eigenvalue {
    Rational value;
    std::size_t algebraic = 0;
};

struct RationalRoots {
    std::vector<Eigenvalue> roots;  // strictly decreasing
    // p = residual * prod (root - t)^multiplicity; constant when p splits
    Polynomial residual;

    bool splits() const { return residual.degree() <= 0; }
};

RationalRoots rational_roots(const Polynomial& p);

inline RationalRoots eigenvalues(const Matrix& a) { return rational_roots(char_poly(a)); }

// "(2 - t)(1 - t)(-1 - t)"; the residual factor is appended when it is not 1.
std::string render_factored(const RationalRoots& r, const std::string& var = "t");

Subspace eigenspace(const Matrix& a, const Rational& lambda);

struct Multiplicity {
    Rational value;
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
};

// First eigenvalue whose geometric multiplicity falls short, if any.
std::optional<Rational> deficient_eigenvalue(std::span<const Multiplicity> m);

struct Diagonalization {
    enum class Kind { Diagonalizable, NotDiagonalizable, NotSplit };

    Kind kind = Kind::NotSplit;
    Polynomial char_poly;
    RationalRoots roots;
    std::vector<Multiplicity> multiplicities;
    std::vector<Subspace> eigenspaces;  // aligned with multiplicities
    std::optional<Rational> deficient;
    std::optional<Matrix> l;
    std::optional<Matrix> d;
};

Diagonalization diagonalize(const Matrix& a);

// L·D^k·L⁻¹ when A diagonalizes over Q, repeated squaring otherwise.
Matrix matrix_power(const Matrix& a, long k);
Matrix matrix_power_by_squaring(const Matrix& a, long k);

}  // namespace exactla
