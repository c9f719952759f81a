#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "exactla/vector_space.hpp"

namespace exactla {

Rational dot(const Matrix& u, const Matrix& v);
Rational squared_norm(const Matrix& v);

struct OrthogonalityCheck {
    bool orthogonal = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // 0-based
    Rational failing_dot;
};

OrthogonalityCheck is_orthogonal_set(std::span<const Matrix> vectors);

struct OrthogonalBasis {
    std::vector<Matrix> input_basis;  // the canonicalized generators
    std::vector<Matrix> vectors;
    std::vector<Rational> squared_norms;
    // projections[i][j] = (v_i . W_j) / |W_j|^2 for j < i
    std::vector<std::vector<Rational>> projections;
};

// Unnormalized: W_i = v_i - sum_j<i (v_i.W_j / |W_j|^2) W_j over the
// canonical basis of the span of `generators`.
OrthogonalBasis gram_schmidt(std::span<const Matrix> generators);

}  // namespace exactla
