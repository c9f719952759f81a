#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exactla/elimination.hpp"
#include "exactla/linear_form.hpp"

namespace exactla {

// Subspace of Q^n held as a list of independent row vectors.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<Matrix> basis;

    std::size_t dimension() const { return basis.size(); }
};

struct Independence {
    bool independent = true;
    // Index of the input vector whose row reduced to zero.
    std::optional<std::size_t> witness;
    Matrix semi_reduced = Matrix(1, 1);
};

Independence independence(std::span<const Matrix> vectors);

Subspace zero_subspace(std::size_t n);
Subspace basis_of_span(std::span<const Matrix> vectors);

struct Membership {
    bool member = false;
    std::vector<Rational> coefficients;  // against space.basis, when member
};

Membership span_contains(const Subspace& space, const Matrix& q);

// Mutual containment.
bool same_span(const Subspace& a, const Subspace& b);

// Keeps the inputs first, then appends standard basis vectors that keep the
// set independent.
Subspace extend_to_basis(std::span<const Matrix> vectors, std::size_t n);

struct SubspaceVerdict {
    bool is_subspace = false;
    std::string reason;
    std::vector<Matrix> on_off_points;
    Subspace space;
};

SubspaceVerdict subspace_from_forms(const FormSystem& system);

struct Fundamentals {
    Subspace null;
    Subspace row;
    Subspace column;
    std::size_t rank = 0;
    std::size_t nullity = 0;
};

Subspace null_space(const Matrix& a);
Fundamentals fundamental_subspaces(const Matrix& a);

}  // namespace exactla
