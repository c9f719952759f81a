#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exactla/polynomial.hpp"
#include "exactla/vector_space.hpp"

namespace exactla {

// A linear map Q^n -> Q^m held as its m×n standard matrix. The labels only
// affect rendering ("Q^3", "P_3", "2x2 matrices").
struct LinearMap {
    Matrix matrix;
    std::string domain_label;
    std::string codomain_label;

    std::size_t domain_dim() const { return matrix.cols(); }
    std::size_t codomain_dim() const { return matrix.rows(); }
};

struct FormsVerdict {
    bool linear = false;
    std::optional<std::size_t> offending;  // 0-based coordinate with a constant term
    std::optional<LinearMap> map;
};

FormsVerdict from_forms(const FormSystem& forms);
LinearMap from_matrix(const Matrix& m);

inline const Matrix& standard_matrix(const LinearMap& t) { return t.matrix; }

// Image of v as a row vector.
Matrix apply(const LinearMap& t, const Matrix& v);

LinearMap from_basis_images(std::span<const std::pair<Matrix, Matrix>> pairs);

Subspace kernel(const LinearMap& t);
Subspace range(const LinearMap& t);

// a0 + a1 x + ... + a(n-1) x^(n-1)  <->  (a0, ..., a(n-1))
Matrix poly_to_coords(const Polynomial& p, std::size_t n);
Polynomial coords_to_poly(const Matrix& v);

// f -> integral of f over [0, 1], on P_n coordinates.
LinearMap integral_functional(std::size_t n);

// Row-major p×q <-> Q^(pq).
Matrix flatten(const Matrix& m);
Matrix unflatten(const Matrix& v, std::size_t rows, std::size_t cols);

}  // namespace exactla
