#include "exactla/inner_product.hpp"

#include "exactla/error.hpp"

namespace exactla {

Rational dot(const Matrix& u, const Matrix& v) {
    if (!u.is_vector() || !v.is_vector()) fail(ErrorCode::DimensionMismatch, "dot product needs two vectors");
    const auto a = u.entries();
    const auto b = v.entries();
    if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot product of vectors with different lengths");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational squared_norm(const Matrix& v) { return dot(v, v); }

OrthogonalityCheck is_orthogonal_set(std::span<const Matrix> vectors) {
    stack_rows(vectors);  // dimension checks
    for (const auto& v : vectors) {
        if (v.is_zero()) fail(ErrorCode::ZeroVectorPresent, "orthogonal sets exclude the zero vector");
    }
    OrthogonalityCheck out;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            Rational d = dot(vectors[i], vectors[j]);
            if (!d.is_zero()) {
                out.orthogonal = false;
                out.failing_pair = {i, j};
                out.failing_dot = d;
                return out;
            }
        }
    }
    return out;
}

OrthogonalBasis gram_schmidt(std::span<const Matrix> generators) {
    const Subspace span = basis_of_span(generators);
    if (span.basis.empty()) fail(ErrorCode::AllZeroInput, "generators span only the zero vector");
    OrthogonalBasis out;
    out.input_basis = span.basis;
    for (const auto& v : span.basis) {
        Matrix w = v;
        std::vector<Rational> coeffs;
        for (std::size_t j = 0; j < out.vectors.size(); ++j) {
            Rational c = dot(v, out.vectors[j]) / out.squared_norms[j];
            if (!c.is_zero()) w = subtract(w, scale(c, out.vectors[j]));
            coeffs.push_back(std::move(c));
        }
        out.squared_norms.push_back(squared_norm(w));
        out.vectors.push_back(std::move(w));
        out.projections.push_back(std::move(coeffs));
    }
    return out;
}

}  // namespace exactla
