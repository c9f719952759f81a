#pragma once

#include <span>
#include <string>
#include <vector>

#include "exactla/elimination.hpp"

namespace exactla {

// Row reduction to upper-triangular form, swaps flip the sign.
Rational det(const Matrix& a);

// Full recursive Laplace expansion along the best line at each level.
Rational det_by_cofactors(const Matrix& a);

struct ExpansionLine {
    enum class Kind { Row, Column };
    Kind kind = Kind::Row;
    std::size_t index = 0;

    friend bool operator==(const ExpansionLine&, const ExpansionLine&) = default;
};

struct Expansion {
    ExpansionLine line;
    std::vector<Rational> terms;  // (-1)^(i+j) * a_ij * det(minor), one per entry on the line
    Rational value;
};

Expansion cofactor_expand(const Matrix& a, ExpansionLine line);

// Row or column with the most zeros; ties go to the lower index, rows first.
ExpansionLine best_expansion_line(const Matrix& a);

struct DetEffectLog {
    Rational multiplier = 1;  // product of Scale factors applied
    int parity = 1;           // -1 after an odd number of swaps
    std::vector<std::string> notes;
};

struct DetWithEffects {
    Rational value;
    DetEffectLog log;
    Trace trace;
    Matrix triangular;
};

DetWithEffects det_with_effects(const Matrix& a);

// Determinant after applying `ops` to a matrix whose determinant is `start`.
Rational propagate_det(const Rational& start, std::span<const RowOp> ops);

Matrix inverse_2x2(const Matrix& a);
std::vector<Rational> cramer_solve(const Matrix& c, const Matrix& constants);
Matrix cofactor_matrix(const Matrix& a);
Matrix adjoint(const Matrix& a);
Matrix inverse_adjoint(const Matrix& a);
// Entry (i, k) of the inverse, 0-based.
Rational inverse_entry(const Matrix& a, std::size_t i, std::size_t k);

}  // namespace exactla
