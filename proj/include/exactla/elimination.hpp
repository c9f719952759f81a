#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactla/matrix.hpp"

namespace exactla {

// Row indices are 0-based here; rendering uses R1, R2, ...
struct RowOp {
    enum class Kind { Scale, AddMultiple, Swap };

    Kind kind = Kind::Scale;
    std::size_t source = 0;  // the scaled row for Scale, first row for Swap
    std::size_t target = 0;  // the changed row for AddMultiple, second row for Swap
    Rational alpha = 1;

    static RowOp scale(std::size_t row, const Rational& alpha);
    // alpha * R(source) + R(target) -> R(target)
    static RowOp add_multiple(std::size_t source, const Rational& alpha, std::size_t target);
    static RowOp swap(std::size_t a, std::size_t b);

    friend bool operator==(const RowOp&, const RowOp&) = default;
};

// Throws ZeroScale / InvalidRowOp when the op itself is malformed.
void validate(const RowOp& op);

Matrix apply_row_op(const Matrix& m, const RowOp& op);
Matrix elementary_matrix(const RowOp& op, std::size_t n);
RowOp invert_row_op(const RowOp& op);

// "-2R1", "3R1+R2->R2", "R1<->R3", "-1/3R2"
std::string render_row_op(const RowOp& op);
RowOp parse_row_op(std::string_view text);

struct TraceStep {
    RowOp op;
    Matrix elementary;
};

struct Trace {
    Matrix start;
    Matrix end;
    std::vector<TraceStep> steps;
};

// Applies the recorded ops to trace.start.
Matrix replay(const Trace& trace);
// Product of the elementary matrices, last applied leftmost.
Matrix left_factor(const Trace& trace);

enum class Form { SemiReduced, Reduced, CompletelyReduced, Echelon, ReducedEchelon };

std::string_view to_string(Form f);
Form parse_form(std::string_view name);

struct Reduction {
    Matrix result;
    Trace trace;
};

// Column-by-column elimination. Non-echelon forms keep every leader in the
// row where it was found; the echelon forms then order rows with swaps.
// `column_limit` stops the pivot search after that many columns.
Reduction reduce(const Matrix& m, Form form, std::optional<std::size_t> column_limit = std::nullopt);

bool satisfies_form(const Matrix& m, Form form);

// Column of the first nonzero entry in `row`, if any.
std::optional<std::size_t> leader_column(const Matrix& m, std::size_t row);

struct ParametricValue {
    Rational constant;
    std::vector<Rational> free_coefficients;  // aligned with SolutionSet::free_vars
};

struct SolutionSet {
    enum class Kind { Inconsistent, Unique, Infinite };

    Kind kind = Kind::Inconsistent;
    std::size_t variables = 0;
    std::vector<std::size_t> leading;
    std::vector<std::size_t> free_vars;
    std::vector<ParametricValue> parametric;  // aligned with leading
    Matrix reduced = Matrix(1, 1);
    Trace trace{Matrix(1, 1), Matrix(1, 1), {}};

    // Full assignment for the given free-variable values; the unique
    // solution when there are no free variables.
    std::vector<Rational> evaluate(const std::vector<Rational>& free_values = {}) const;
    std::vector<Rational> particular() const;
};

SolutionSet solve(const Matrix& coefficients, const Matrix& constants);

Matrix inverse_gauss_jordan(const Matrix& a);

}  // namespace exactla
