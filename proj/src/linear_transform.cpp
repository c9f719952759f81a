#include "exactla/linear_transform.hpp"

#include "exactla/determinant.hpp"
#include "exactla/error.hpp"

namespace exactla {

namespace {

std::string euclidean(std::size_t n) { return "Q^" + std::to_string(n); }

}  // namespace

LinearMap from_matrix(const Matrix& m) { return {m, euclidean(m.cols()), euclidean(m.rows())}; }

FormsVerdict from_forms(const FormSystem& system) {
    if (system.forms.empty()) fail(ErrorCode::MalformedForm, "no coordinates given");
    if (system.parameters.empty()) fail(ErrorCode::MalformedForm, "map has no input variables");
    FormsVerdict out;
    for (std::size_t i = 0; i < system.forms.size(); ++i) {
        if (!system.forms[i].constant.is_zero()) {
            out.offending = i;
            return out;
        }
    }
    Matrix m(system.forms.size(), system.parameters.size());
    for (std::size_t i = 0; i < system.forms.size(); ++i) {
        for (std::size_t j = 0; j < system.parameters.size(); ++j) m(i, j) = system.forms[i].coefficients.at(j);
    }
    out.linear = true;
    out.map = from_matrix(m);
    return out;
}

Matrix apply(const LinearMap& t, const Matrix& v) {
    if (!v.is_vector() || v.entries().size() != t.domain_dim()) {
        fail(ErrorCode::DimensionMismatch, "input vector does not live in the domain " + t.domain_label);
    }
    return transpose(multiply(t.matrix, Matrix::column_vector(v.entries())));
}

LinearMap from_basis_images(std::span<const std::pair<Matrix, Matrix>> pairs) {
    if (pairs.empty()) fail(ErrorCode::EmptyInput, "no point/image pairs given");
    std::vector<Matrix> points;
    std::vector<Matrix> images;
    for (const auto& [p, img] : pairs) {
        points.push_back(p);
        images.push_back(img);
    }
    const Matrix p_rows = stack_rows(points);
    const Matrix img_rows = stack_rows(images);
    const std::size_t n = p_rows.cols();
    if (!independence(points).independent) fail(ErrorCode::DependentPoints, "domain points are dependent");
    if (points.size() < n) {
        fail(ErrorCode::NotSpanning, std::to_string(points.size()) + " points cannot span Q^" + std::to_string(n));
    }
    // M * P = Img with the points and images as columns
    const Matrix m = multiply(transpose(img_rows), inverse_gauss_jordan(transpose(p_rows)));
    return from_matrix(m);
}

Subspace kernel(const LinearMap& t) { return null_space(t.matrix); }

Subspace range(const LinearMap& t) { return fundamental_subspaces(t.matrix).column; }

Matrix poly_to_coords(const Polynomial& p, std::size_t n) {
    if (n == 0) fail(ErrorCode::WrongSize, "P_0 is not supported");
    if (p.degree() >= static_cast<long>(n)) {
        fail(ErrorCode::DegreeTooHigh, "degree " + std::to_string(p.degree()) + " does not fit in P_" + std::to_string(n));
    }
    Matrix v(1, n);
    for (std::size_t i = 0; i < n; ++i) v(0, i) = p.coefficient(i);
    return v;
}

Polynomial coords_to_poly(const Matrix& v) {
    if (!v.is_vector()) fail(ErrorCode::DimensionMismatch, "expected a coordinate vector");
    return Polynomial(v.entries());
}

LinearMap integral_functional(std::size_t n) {
    if (n == 0) fail(ErrorCode::WrongSize, "P_0 is not supported");
    Matrix m(1, n);
    for (std::size_t k = 0; k < n; ++k) m(0, k) = Rational(1, static_cast<long>(k + 1));
    return {m, "P_" + std::to_string(n), "Q^1"};
}

Matrix flatten(const Matrix& m) {
    std::vector<Rational> flat;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& x : m.row(i)) flat.push_back(x);
    }
    return Matrix::row_vector(flat);
}

Matrix unflatten(const Matrix& v, std::size_t rows, std::size_t cols) {
    const auto e = v.entries();
    if (e.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "vector length does not match the matrix shape");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = e[i * cols + j];
    }
    return m;
}

}  // namespace exactla
