#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "exactla/rational.hpp"

namespace exactla {

// Dense row-major grid of rationals. A 1×n or n×1 matrix doubles as a vector.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
    explicit Matrix(const std::vector<std::vector<Rational>>& rows);

    static Matrix identity(std::size_t n);
    static Matrix row_vector(const std::vector<Rational>& entries);
    static Matrix column_vector(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_vector() const { return rows_ == 1 || cols_ == 1; }
    bool is_zero() const;

    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    // bounds-checked, throws IndexOutOfRange
    const Rational& at(std::size_t i, std::size_t j) const;

    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> column(std::size_t j) const;
    // Entries of a vector in order, whichever orientation it has.
    std::vector<Rational> entries() const;

    Matrix with_column(std::size_t j, const Matrix& column) const;
    // Drops row i and column j.
    Matrix minor(std::size_t i, std::size_t j) const;
    // Columns [first, first+count).
    Matrix column_block(std::size_t first, std::size_t count) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

enum class SymmetryClass { Symmetric, SkewSymmetric, Neither, NotSquare };

inline Matrix identity(std::size_t n) { return Matrix::identity(n); }

Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& alpha, const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
// [A | B]
Matrix augment(const Matrix& a, const Matrix& b);
Rational trace_of(const Matrix& a);

inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }
inline Matrix operator*(const Rational& s, const Matrix& a) { return scale(s, a); }

SymmetryClass classify_symmetry(const Matrix& a);

struct SymSkew {
    Matrix symmetric;  // A + Aᵀ
    Matrix skew;       // A − Aᵀ
};
SymSkew sym_skew_decompose(const Matrix& a);

enum class CombinationAxis { Columns, Rows };

// One column (or row) of A·B written as a combination of the columns of A
// (or rows of B).
struct Combination {
    std::vector<Rational> coefficients;
    std::vector<Matrix> generators;
    Matrix result;
};
std::vector<Combination> product_as_combination(const Matrix& a, const Matrix& b, CombinationAxis axis);
Matrix recombine(const Combination& c);

// Stack vectors (any orientation) as the rows of a matrix. Throws EmptyInput
// or MixedDimensions.
Matrix stack_rows(std::span<const Matrix> vectors);

std::string_view to_string(SymmetryClass c);

}  // namespace exactla
