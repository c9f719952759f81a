#include "exactla/vector_space.hpp"

#include "exactla/error.hpp"

namespace exactla {

namespace {

Matrix as_row(const Matrix& v) { return Matrix::row_vector(v.entries()); }

Matrix unit_row(std::size_t n, std::size_t i) {
    Matrix e(1, n);
    e(0, i) = 1;
    return e;
}

}  // namespace

Independence independence(std::span<const Matrix> vectors) {
    const Matrix stacked = stack_rows(vectors);
    Independence out;
    out.semi_reduced = reduce(stacked, Form::SemiReduced).result;
    for (std::size_t i = 0; i < stacked.rows(); ++i) {
        if (!leader_column(out.semi_reduced, i)) {
            out.independent = false;
            out.witness = i;
            break;
        }
    }
    return out;
}

Subspace zero_subspace(std::size_t n) { return {n, {}}; }

Subspace basis_of_span(std::span<const Matrix> vectors) {
    const Matrix stacked = stack_rows(vectors);
    const Matrix semi = reduce(stacked, Form::SemiReduced).result;
    Subspace out{stacked.cols(), {}};
    for (std::size_t i = 0; i < semi.rows(); ++i) {
        if (leader_column(semi, i)) out.basis.push_back(Matrix::row_vector(semi.row(i)));
    }
    return out;
}

Membership span_contains(const Subspace& space, const Matrix& q) {
    const auto target = q.entries();
    if (!q.is_vector() || target.size() != space.ambient) {
        fail(ErrorCode::DimensionMismatch, "vector does not live in the ambient space");
    }
    Membership out;
    if (space.basis.empty()) {
        out.member = q.is_zero();
        return out;
    }
    // columns are the basis vectors
    const Matrix coefficients = transpose(stack_rows(space.basis));
    const auto sol = solve(coefficients, Matrix::column_vector(target));
    if (sol.kind == SolutionSet::Kind::Inconsistent) return out;
    out.member = true;
    out.coefficients = sol.particular();
    return out;
}

bool same_span(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) return false;
    for (const auto& v : a.basis) {
        if (!span_contains(b, v).member) return false;
    }
    for (const auto& v : b.basis) {
        if (!span_contains(a, v).member) return false;
    }
    return true;
}

Subspace extend_to_basis(std::span<const Matrix> vectors, std::size_t n) {
    Subspace out{n, {}};
    if (!vectors.empty()) {
        const Matrix stacked = stack_rows(vectors);
        if (stacked.cols() != n) fail(ErrorCode::MixedDimensions, "vectors do not live in Q^" + std::to_string(n));
        if (!independence(vectors).independent) fail(ErrorCode::InputDependent, "input vectors are dependent");
        for (const auto& v : vectors) out.basis.push_back(as_row(v));
    }
    for (std::size_t i = 0; i < n && out.basis.size() < n; ++i) {
        out.basis.push_back(unit_row(n, i));
        if (!independence(out.basis).independent) out.basis.pop_back();
    }
    return out;
}

SubspaceVerdict subspace_from_forms(const FormSystem& system) {
    if (system.forms.empty()) fail(ErrorCode::MalformedForm, "no coordinates given");
    for (const auto& f : system.forms) {
        if (f.coefficients.size() != system.parameters.size()) {
            fail(ErrorCode::MalformedForm, "form does not cover the declared parameters");
        }
    }
    SubspaceVerdict out;
    const std::size_t n = system.forms.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!system.forms[i].constant.is_zero()) {
            out.reason = "coordinate " + std::to_string(i + 1) + " has constant term " +
                         system.forms[i].constant.to_string() + ", so the origin is excluded";
            return out;
        }
    }
    out.is_subspace = true;
    if (system.parameters.empty()) {
        out.space = zero_subspace(n);
        return out;
    }
    for (std::size_t p = 0; p < system.parameters.size(); ++p) {
        std::vector<Rational> point;
        for (const auto& f : system.forms) point.push_back(f.coefficients[p]);
        out.on_off_points.push_back(Matrix::row_vector(point));
    }
    out.space = basis_of_span(out.on_off_points);
    return out;
}

Subspace null_space(const Matrix& a) {
    const Matrix r = reduce(a, Form::CompletelyReduced).result;
    const std::size_t n = a.cols();
    std::vector<std::optional<std::size_t>> row_of_leader(n);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        if (const auto lead = leader_column(r, i)) row_of_leader[*lead] = i;
    }
    Subspace out{n, {}};
    // ON-OFF: one free variable set to 1, the others 0
    for (std::size_t f = 0; f < n; ++f) {
        if (row_of_leader[f]) continue;
        Matrix v(1, n);
        v(0, f) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (row_of_leader[j]) v(0, j) = -r(*row_of_leader[j], f);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

Fundamentals fundamental_subspaces(const Matrix& a) {
    Fundamentals out;
    out.null = null_space(a);
    const Matrix semi = reduce(a, Form::SemiReduced).result;
    out.row.ambient = a.cols();
    out.column.ambient = a.rows();
    std::vector<bool> pivot_column(a.cols(), false);
    for (std::size_t i = 0; i < semi.rows(); ++i) {
        const auto lead = leader_column(semi, i);
        if (!lead) continue;
        out.row.basis.push_back(Matrix::row_vector(semi.row(i)));
        pivot_column[*lead] = true;
    }
    // original columns at the leader positions, left to right
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (pivot_column[j]) out.column.basis.push_back(Matrix::row_vector(a.column(j)));
    }

    out.rank = out.row.dimension();
    out.nullity = out.null.dimension();
    return out;
}

}  // namespace exactla
