#include "exactla/matrix.hpp"

#include <string>

#include "exactla/error.hpp"

namespace exactla {

namespace {

void require_same_order(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                 std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) fail(ErrorCode::EmptyInput, "matrix must have at least one row and column");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> grid;
    grid.reserve(rows.size());
    for (const auto& r : rows) grid.emplace_back(r);
    *this = Matrix(grid);
}

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty()) fail(ErrorCode::EmptyInput, "empty matrix");
    rows_ = rows.size();
    cols_ = rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(ErrorCode::RaggedRows, "rows have different lengths");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::row_vector(const std::vector<Rational>& entries) {
    return Matrix(std::vector<std::vector<Rational>>{entries});
}

Matrix Matrix::column_vector(const std::vector<Rational>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        fail(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return (*this)(i, j);
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Rational> Matrix::column(std::size_t j) const {
    std::vector<Rational> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

std::vector<Rational> Matrix::entries() const { return data_; }

Matrix Matrix::with_column(std::size_t j, const Matrix& column) const {
    if (j >= cols_) fail(ErrorCode::IndexOutOfRange, "column index out of range");
    const auto values = column.entries();
    if (values.size() != rows_) fail(ErrorCode::DimensionMismatch, "replacement column has wrong length");
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = values[i];
    return out;
}

Matrix Matrix::minor(std::size_t i, std::size_t j) const {
    if (rows_ < 2 || cols_ < 2) fail(ErrorCode::WrongSize, "minor of a matrix with a single row or column");
    if (i >= rows_ || j >= cols_) fail(ErrorCode::IndexOutOfRange, "minor index out of range");
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == j) continue;
            out(rr, cc++) = (*this)(r, c);
        }
        ++rr;
    }
    return out;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_ || count == 0) fail(ErrorCode::IndexOutOfRange, "column block out of range");
    Matrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_order(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    }
    return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    require_same_order(a, b, "subtract");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    }
    return out;
}

Matrix scale(const Rational& alpha, const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= alpha;
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        fail(ErrorCode::DimensionMismatch, "multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                               " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

Matrix augment(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "augment: row counts differ");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Rational trace_of(const Matrix& a) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "trace of a non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

SymmetryClass classify_symmetry(const Matrix& a) {
    if (!a.is_square()) return SymmetryClass::NotSquare;
    bool symmetric = true;
    bool skew = true;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != a(j, i)) symmetric = false;
            if (a(i, j) != -a(j, i)) skew = false;
        }
    }
    // the zero matrix is both; report it as symmetric
    if (symmetric) return SymmetryClass::Symmetric;
    if (skew) return SymmetryClass::SkewSymmetric;
    return SymmetryClass::Neither;
}

SymSkew sym_skew_decompose(const Matrix& a) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "symmetric decomposition needs a square matrix");
    const Matrix t = transpose(a);
    return {add(a, t), subtract(a, t)};
}

std::vector<Combination> product_as_combination(const Matrix& a, const Matrix& b, CombinationAxis axis) {
    const Matrix ab = multiply(a, b);
    std::vector<Combination> out;
    if (axis == CombinationAxis::Columns) {
        std::vector<Matrix> gens;
        for (std::size_t k = 0; k < a.cols(); ++k) gens.push_back(Matrix::column_vector(a.column(k)));
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out.push_back({b.column(j), gens, Matrix::column_vector(ab.column(j))});
        }
    } else {
        std::vector<Matrix> gens;
        for (std::size_t k = 0; k < b.rows(); ++k) gens.push_back(Matrix::row_vector(b.row(k)));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            out.push_back({a.row(i), gens, Matrix::row_vector(ab.row(i))});
        }
    }
    return out;
}

Matrix recombine(const Combination& c) {
    Matrix acc = scale(0, c.generators.at(0));
    for (std::size_t k = 0; k < c.generators.size(); ++k) acc = add(acc, scale(c.coefficients.at(k), c.generators[k]));
    return acc;
}

Matrix stack_rows(std::span<const Matrix> vectors) {
    if (vectors.empty()) fail(ErrorCode::EmptyInput, "no vectors given");
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) {
        if (!v.is_vector()) fail(ErrorCode::MixedDimensions, "expected a vector, got a matrix");
        rows.push_back(v.entries());
        if (rows.back().size() != rows.front().size()) {
            fail(ErrorCode::MixedDimensions, "vectors have different dimensions");
        }
    }
    return Matrix(rows);
}

std::string_view to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Symmetric: return "symmetric";
        case SymmetryClass::SkewSymmetric: return "skew-symmetric";
        case SymmetryClass::Neither: return "neither";
        case SymmetryClass::NotSquare: return "not square";
    }
    return "neither";
}

}  // namespace exactla
