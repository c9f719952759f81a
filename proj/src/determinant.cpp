#include "exactla/determinant.hpp"

#include "exactla/error.hpp"

namespace exactla {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, std::string(what) + " needs a square matrix");
}

Rational checkerboard(std::size_t i, std::size_t j) { return (i + j) % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

DetWithEffects det_with_effects(const Matrix& a) {
    require_square(a, "determinant");
    const std::size_t n = a.rows();
    Matrix m = a;
    Trace trace{a, a, {}};
    DetEffectLog log;
    auto apply = [&](const RowOp& op, std::string note) {
        m = apply_row_op(m, op);
        trace.steps.push_back({op, elementary_matrix(op, n)});
        log.notes.push_back(render_row_op(op) + ": " + std::move(note));
    };

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) continue;
        if (p != c) {
            apply(RowOp::swap(c, p), "sign flips");
            log.parity = -log.parity;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            apply(RowOp::add_multiple(c, -m(i, c) / m(c, c), i), "no change");
        }
    }

    Rational diag = 1;
    for (std::size_t i = 0; i < n; ++i) diag *= m(i, i);
    trace.end = m;
    Rational value = Rational(log.parity) * diag / log.multiplier;
    return {value, std::move(log), std::move(trace), m};
}

Rational det(const Matrix& a) { return det_with_effects(a).value; }

Rational det_by_cofactors(const Matrix& a) {
    require_square(a, "determinant");
    if (a.rows() == 1) return a(0, 0);
    if (a.rows() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const ExpansionLine line = best_expansion_line(a);
    Rational sum;
    for (std::size_t t = 0; t < a.rows(); ++t) {
        const std::size_t i = line.kind == ExpansionLine::Kind::Row ? line.index : t;
        const std::size_t j = line.kind == ExpansionLine::Kind::Row ? t : line.index;
        if (a(i, j).is_zero()) continue;
        sum += checkerboard(i, j) * a(i, j) * det_by_cofactors(a.minor(i, j));
    }
    return sum;
}

Expansion cofactor_expand(const Matrix& a, ExpansionLine line) {
    require_square(a, "cofactor expansion");
    const std::size_t n = a.rows();
    if (line.index >= n) fail(ErrorCode::IndexOutOfRange, "expansion line out of range");
    Expansion out{line, {}, 0};
    if (n == 1) {
        out.terms.push_back(a(0, 0));
        out.value = a(0, 0);
        return out;
    }
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t i = line.kind == ExpansionLine::Kind::Row ? line.index : t;
        const std::size_t j = line.kind == ExpansionLine::Kind::Row ? t : line.index;
        Rational term = a(i, j).is_zero() ? Rational{} : checkerboard(i, j) * a(i, j) * det(a.minor(i, j));
        out.value += term;
        out.terms.push_back(std::move(term));
    }
    return out;
}

ExpansionLine best_expansion_line(const Matrix& a) {
    require_square(a, "cofactor expansion");
    ExpansionLine best;
    std::size_t best_zeros = 0;
    bool first = true;
    for (auto kind : {ExpansionLine::Kind::Row, ExpansionLine::Kind::Column}) {
        for (std::size_t k = 0; k < a.rows(); ++k) {
            std::size_t zeros = 0;
            for (std::size_t t = 0; t < a.rows(); ++t) {
                const Rational& x = kind == ExpansionLine::Kind::Row ? a(k, t) : a(t, k);
                if (x.is_zero()) ++zeros;
            }
            if (first || zeros > best_zeros) {
                best = {kind, k};
                best_zeros = zeros;
                first = false;
            }
        }
    }
    return best;
}

Rational propagate_det(const Rational& start, std::span<const RowOp> ops) {
    Rational value = start;
    for (const auto& op : ops) {
        validate(op);
        switch (op.kind) {
            case RowOp::Kind::Scale: value *= op.alpha; break;
            case RowOp::Kind::Swap: value = -value; break;
            case RowOp::Kind::AddMultiple: break;
        }
    }
    return value;
}

Matrix inverse_2x2(const Matrix& a) {
    if (a.rows() != 2 || a.cols() != 2) fail(ErrorCode::WrongSize, "the 2x2 inverse formula needs a 2x2 matrix");
    const Rational d = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (d.is_zero()) fail(ErrorCode::NotInvertible, "matrix is not invertible (det = 0)");
    return scale(d.reciprocal(), Matrix{{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}});
}

std::vector<Rational> cramer_solve(const Matrix& c, const Matrix& constants) {
    require_square(c, "Cramer's rule");
    if (!constants.is_vector() || constants.entries().size() != c.rows()) {
        fail(ErrorCode::DimensionMismatch, "constants must have one entry per equation");
    }
    const Rational d = det(c);
    if (d.is_zero()) fail(ErrorCode::SingularCoefficient, "coefficient determinant is 0");
    const Matrix column = Matrix::column_vector(constants.entries());
    std::vector<Rational> x;
    for (std::size_t i = 0; i < c.cols(); ++i) x.push_back(det(c.with_column(i, column)) / d);
    return x;
}

Matrix cofactor_matrix(const Matrix& a) {
    require_square(a, "cofactor matrix");
    const std::size_t n = a.rows();
    if (n == 1) return Matrix::identity(1);
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = checkerboard(i, j) * det(a.minor(i, j));
    }
    return out;
}

Matrix adjoint(const Matrix& a) { return transpose(cofactor_matrix(a)); }

Matrix inverse_adjoint(const Matrix& a) {
    require_square(a, "inverse");
    const Rational d = det(a);
    if (d.is_zero()) fail(ErrorCode::NotInvertible, "matrix is not invertible (det = 0)");
    return scale(d.reciprocal(), adjoint(a));
}

Rational inverse_entry(const Matrix& a, std::size_t i, std::size_t k) {
    require_square(a, "inverse entry");
    const std::size_t n = a.rows();
    if (i >= n || k >= n) fail(ErrorCode::IndexOutOfRange, "inverse entry index out of range");
    const Rational d = det(a);
    if (d.is_zero()) fail(ErrorCode::NotInvertible, "matrix is not invertible (det = 0)");
    if (n == 1) return d.reciprocal();
    return checkerboard(i, k) * det(a.minor(k, i)) / d;
}

}  // namespace exactla
