// Criteria 1-3: worked examples, answer-key fixtures and erratum derivations.
#include <algorithm>

#include "criteria.hpp"
#include "exactla/determinant.hpp"
#include "exactla/eigen.hpp"
#include "exactla/elimination.hpp"
#include "exactla/inner_product.hpp"
#include "exactla/linear_transform.hpp"
#include "exactla/vector_space.hpp"
#include "support.hpp"

namespace acceptance {

using namespace exactla;
using namespace testing_support;

namespace {

Matrix col(const std::string& text) { return transpose(V(text)); }

bool same_vectors(const std::vector<Matrix>& got, const std::string& expected) {
    return got == Vs(expected);
}

bool spans_equal(const std::vector<Matrix>& got, const std::string& expected) {
    return same_span(basis_of_span(got), basis_of_span(Vs(expected)));
}

}  // namespace

void golden_examples(Checker& c) {
    c.section("2x2 unique system", [&] {
        const auto s = solve(M("3 2; -2 1"), col("5 -6"));
        c.expect(s.kind == SolutionSet::Kind::Unique && s.particular() == V("17/7 -8/7").entries(),
                 "2x2 unique system unique (17/7, -8/7)");
    });
    c.section("3x3 unique system", [&] {
        const auto s = solve(M("1 1 -1; 2 -1 1; 0 -1 2"), col("2 2 1"));
        c.expect(s.kind == SolutionSet::Kind::Unique && s.particular() == V("4/3 7/3 5/3").entries(),
                 "3x3 unique system unique (4/3, 7/3, 5/3)");
        std::vector<std::string> ops;
        for (const auto& step : s.trace.steps) ops.push_back(render_row_op(step.op));
        c.expect(ops == std::vector<std::string>{"-2R1+R2->R2", "-1/3R2", "R2+R3->R3", "-R2+R1->R1", "R3+R2->R2"},
                 "3x3 unique system row operations in the printed order");
    });
    c.section("free-variable system", [&] {
        const auto s = solve(M("0 1 -1 1 -1; -2 0 1 0 -1; 0 -1 1 2 -10"), col("1 0 12"));
        c.expect(s.kind == SolutionSet::Kind::Infinite, "free-variable system infinite");
        c.expect(s.free_vars == std::vector<std::size_t>{2, 4}, "free-variable system free {x3, x5}");
        c.expect(s.leading == std::vector<std::size_t>{0, 1, 3}, "free-variable system leading {x1, x2, x4}");
        c.expect(s.particular() == V("0 -10/3 0 13/3 0").entries(), "free-variable system particular point");
        c.expect(s.evaluate({1, 0}) == V("1/2 -7/3 1 13/3 0").entries(), "free-variable system second solution at x3 = 1");
    });
    c.section("inconsistent system", [&] {
        c.expect(solve(M("1 2 -1; 2 4 -2"), col("2 6")).kind == SolutionSet::Kind::Inconsistent,
                 "inconsistent system inconsistent");
    });
    c.section("combination", [&] {
        const Matrix a = M("2 1 3; 0 1 5"), cm = M("-3 2 5; 1 7 3");
        c.expect(subtract(scale(3, a), scale(2, cm)) == M("12 -1 -1; -2 -11 9"), "combination 3A - 2C");
    });
    c.section("product", [&] {
        const Matrix a = M("1 2; 3 6; 1 1"), b = M("1 1 1; 0 2 1");
        c.expect(multiply(a, b) == M("1 5 3; 3 15 9; 1 3 2"), "product AB");
        c.expect(multiply(b, a) == M("5 9; 7 13"), "product BA");
    });
    c.section("Gauss-Jordan inverses", [&] {
        c.expect(inverse_gauss_jordan(M("2 1; 4 0")) == M("0 1/4; 1 -1/2"), "2x2 Gauss-Jordan inverse");
        c.expect(inverse_gauss_jordan(M("1 0 2; 0 1 0; 0 -1 1")) == M("1 -2 -2; 0 1 0; 0 1 1"), "3x3 Gauss-Jordan inverse");
    });
    c.section("symmetric split", [&] {
        const auto d = sym_skew_decompose(M("2 1 4; 3 0 1; 5 6 7"));
        c.expect(d.symmetric == M("4 4 9; 4 0 7; 9 7 14") && d.skew == M("0 -2 -1; 2 0 -5; 1 5 0"),
                 "symmetric split (B, C)");
    });
    c.section("determinants", [&] {
        c.expect(det(M("3 2; 5 7")) == 11, "2x2 det 11");
        c.expect(det(M("1 0 2; 3 1 -1; 1 2 4")) == 16, "3x3 det 16");
        const auto e = cofactor_expand(M("1 0 2; 3 1 -1; 1 2 4"), {ExpansionLine::Kind::Column, 1});
        c.expect(e.terms == std::vector<Rational>{0, 2, 14} && e.value == 16, "3x3 column 2 terms 0, 2, 14");
        c.expect(inverse_2x2(M("3 2; -4 5")) == scale(Q("1/23"), M("5 -2; 4 3")), "2x2 inverse formula (1/23)[[5,-2],[4,3]]");
        const std::vector<RowOp> ops = {RowOp::scale(0, 2), RowOp::scale(2, 3), RowOp::scale(3, -2)};
        c.expect(propagate_det(4, ops) == -48, "row-op propagation 4 -> -48");
    });
    c.section("2x2", [&] {
        c.expect(cramer_solve(M("2 7; -10 3"), col("13 -4")) == V("67/76 122/76").entries(), "2x2 Cramer");
    });
    c.section("4x4", [&] {
        const Matrix a = M("2 0 -2 1; -2 1 2 4; -4 -1 3 0; 0 0 0 4");
        c.expect(det(a) == -8, "4x4 det -8");
        c.expect(inverse_entry(a, 1, 3) == Q("-5/4"), "4x4 inverse entry (2,4) = -5/4");
    });
    c.section("subspace from forms", [&] {
        const auto v = subspace_from_forms(parse_forms("a, -2a+b, -a"));
        c.expect(v.is_subspace && same_vectors(v.space.basis, "(1,-2,-1) (0,1,0)"), "subspace from forms basis");
    });
    c.section("span membership", [&] {
        const auto gens = Vs("(1,1,1,1) (-1,-1,0,0) (0,0,1,1)");
        const Matrix q = V("1 1 2 2");
        const auto space = basis_of_span(gens);
        const auto m = span_contains(space, q);
        c.expect(m.member && m.coefficients == std::vector<Rational>{1, 1}, "span membership member, unit coefficients");
        c.expect(add(space.basis[0], space.basis[1]) == q, "span membership q = basis1 + basis2");
    });
    c.section("null space", [&] {
        const auto f = fundamental_subspaces(M("1 -1 2 0 -1; 0 1 2 0 2; 0 0 0 1 0"));
        c.expect(same_vectors(f.null.basis, "(-4,-2,1,0,0) (-1,-2,0,0,1)"), "null space null basis");
        c.expect(f.nullity == 2 && f.rank == 3, "null space nullity 2, rank 3");
    });
    c.section("row and column spaces", [&] {
        const auto f = fundamental_subspaces(M("1 1 1 1 1; -1 -1 -1 0 2; 0 0 0 0 0"));
        c.expect(same_vectors(f.row.basis, "(1,1,1,1,1) (0,0,0,1,3)"), "row and column spaces row basis");
        c.expect(same_vectors(f.column.basis, "(1,-1,0) (1,0,0)"), "row and column spaces column basis");
        c.expect(f.rank == 2, "row and column spaces rank 2");
    });
    c.section("map from basis images", [&] {
        const std::vector<std::pair<Matrix, Matrix>> pairs = {{V("2 0"), V("0 1 4")}, {V("-1 1"), V("2 1 5")}};
        c.expect(apply(from_basis_images(pairs), V("3 5")) == V("10 9 41"), "map from basis images T(3,5) = (10,9,41)");
    });
    c.section("map from forms", [&] {
        const auto verdict = from_forms(parse_forms("-5x1, 2x2+x3, -x1, 0"));
        c.expect(verdict.linear, "map from forms linear");
        const LinearMap& t = *verdict.map;
        c.expect(t.matrix == M("-5 0 0; 0 2 1; -1 0 0; 0 0 0"), "map from forms standard matrix");
        c.expect(apply(t, V("3 2 1")) == V("-15 5 -3 0"), "map from forms T(3,2,1)");
        c.expect(same_vectors(kernel(t).basis, "(0,-1/2,1)"), "map from forms kernel");
        c.expect(same_vectors(range(t).basis, "(-5,0,-1,0) (0,2,0,0)"), "map from forms range");
    });
    c.section("polynomial map", [&] {
        const LinearMap t = integral_functional(2);
        const Polynomial p({Rational(-1), Rational(2)});
        c.expect(apply(t, poly_to_coords(p, 2)) == V("0"), "polynomial map T(2x - 1) = 0");
        c.expect(same_vectors(kernel(t).basis, "(-1/2, 1)"), "polynomial map kernel -1/2 + x");
    });
    const Matrix a412 = M("2 0 1; 0 1 -2; 0 0 -1");
    c.section("triangular eigen", [&] {
        const auto roots = eigenvalues(a412);
        std::vector<Rational> values;
        for (const auto& r : roots.roots) values.push_back(r.value);
        c.expect(values == std::vector<Rational>{2, 1, -1} && roots.splits(), "triangular eigen eigenvalues {2,1,-1}");
        c.expect(same_vectors(eigenspace(a412, 2).basis, "(1,0,0)"), "triangular eigen eigenspace of 2");
        c.expect(same_vectors(eigenspace(a412, 1).basis, "(0,1,0)"), "triangular eigen eigenspace of 1");
        c.expect(same_vectors(eigenspace(a412, -1).basis, "(-1/3,1,1)"), "triangular eigen eigenspace of -1");
    });
    c.section("diagonalized power", [&] {
        const auto d = diagonalize(a412);
        c.expect(d.kind == Diagonalization::Kind::Diagonalizable, "diagonalized power diagonalizable");
        c.expect(multiply(multiply(*d.l, *d.d), inverse_gauss_jordan(*d.l)) == a412, "diagonalized power L D L^-1 = A");
        const Matrix d6 = matrix_power_by_squaring(*d.d, 6);
        std::vector<Rational> diag = {d6(0, 0), d6(1, 1), d6(2, 2)};
        std::sort(diag.begin(), diag.end());
        c.expect(diag == std::vector<Rational>{1, 1, 64} && d6 == M("64 0 0; 0 1 0; 0 0 1"), "diagonalized power D^6");
        c.expect(matrix_power(a412, 6) == M("64 0 21; 0 1 0; 0 0 1"), "diagonalized power A^6");
    });
    c.section("dot product", [&] { c.expect(dot(V("2 4 1 3"), V("0 1 2 5")) == 21, "dot product A . B = 21"); });
    c.section("Gram-Schmidt in R4", [&] {
        const auto gs = gram_schmidt(Vs("(1,0,1,1) (0,1,0,1) (0,1,1,1)"));
        c.expect(gs.vectors.size() == 3, "Gram-Schmidt in R4 dim 3");
        c.expect(gs.vectors.at(0) == V("1 0 1 1"), "Gram-Schmidt in R4 W1");
        c.expect(gs.vectors.at(1) == V("-1/3 1 -1/3 2/3"), "Gram-Schmidt in R4 W2");
    });
}

void answer_keys(Checker& c) {
    c.section("key 2x2 inverse", [&] {
        c.expect(inverse_gauss_jordan(M("4 -2; -3 2")) == M("1 1; 3/2 2"), "key 2x2 inverse inverse");
    });
    c.section("key 3x3", [&] {
        c.expect(cramer_solve(M("2 1 -1; -2 4 2; -2 -1 8"), col("2 8 -2")) == V("0 2 0").entries(),
                 "key 3x3 Cramer (0, 2, 0)");
    });
    c.section("key 4x4", [&] {
        const Matrix a = M("2 -4 2 1; -2 0 2 -1; 1 -2 12 4; -2 4 -2 12");
        c.expect(det(a) == -1144, "key 4x4 det -1144");
        c.expect(inverse_entry(a, 1, 3) == Q("-7/286"), "key 4x4 entry (2,4) = -7/286");
    });
    c.section("key dependence parameter", [&] {
        auto dependent_at = [](int x) {
            return !independence(Vs("(1,0,5) (1,2,4) (1,4," + std::to_string(x) + ")")).independent;
        };
        c.expect(dependent_at(3) && !dependent_at(2) && !dependent_at(4), "key dependence parameter dependent exactly at x = 3");
    });
    c.section("key span dimension", [&] {
        c.expect(basis_of_span(Vs("(1,-1,0) (2,-1,0) (1,0,0)")).dimension() == 2, "key span dimension dim(K) = 2");
    });
    c.section("key integral functional", [&] {
        c.expect(spans_equal(kernel(integral_functional(3)).basis, "(-1/2,1,0) (-1/3,0,1)"),
                 "key integral functional Ker = Span{-1/2 + x, -1/3 + x^2}");
    });
    c.section("key 4x4 kernel", [&] {
        const LinearMap t = from_matrix(M("1 -1 1 -1; 1 0 0 0; 1 -1 1 -1; 1 0 0 0"));
        c.expect(spans_equal(kernel(t).basis, "(0,1,1,0) (0,-1,0,1)"), "key 4x4 kernel kernel");
    });
    c.section("key deficient at -1", [&] {
        const auto d = diagonalize(M("1 0 0 0; 0 1 1 1; 0 0 -1 1; 0 0 0 -1"));
        c.expect(d.kind == Diagonalization::Kind::NotDiagonalizable && d.deficient == Rational(-1),
                 "key 4x4 not diagonalizable, deficient at -1");
    });
    c.section("key deficient at 2", [&] {
        const std::vector<Multiplicity> fixture = {{1, 1, 1}, {2, 2, 1}};
        c.expect(deficient_eigenvalue(fixture) == Rational(2), "key multiplicity fixture deficient at 2");
        const Matrix p = transpose(M("1 2 0; 2 0 3; 0 0 1"));
        const Matrix w = multiply(multiply(p, M("1 0 0; 0 2 1; 0 0 2")), inverse_gauss_jordan(p));
        const auto d = diagonalize(w);
        c.expect(d.kind == Diagonalization::Kind::NotDiagonalizable && d.deficient == Rational(2),
                 "key concrete matrix deficient at 2");
    });
    c.section("key 5x5", [&] {
        const Matrix l = transpose(M("2 1 0 0 1; 0 1 0 1 1; 0 0 2 2 0; 0 0 0 1 1; 0 0 0 0 10"));
        const Matrix dd = M("3 0 0 0 0; 0 3 0 0 0; 0 0 3 0 0; 0 0 0 2 0; 0 0 0 0 2");
        const Matrix a = multiply(multiply(l, dd), inverse_gauss_jordan(l));
        const auto d = diagonalize(a);
        c.expect(d.kind == Diagonalization::Kind::Diagonalizable && *d.d == dd, "key 5x5 D = diag(3,3,3,2,2)");
    });
    c.section("key Gram-Schmidt", [&] {
        const auto gens = Vs("(0,0,1,1) (1,0,1,1) (1,-1,1,0)");
        const auto gs = gram_schmidt(gens);
        c.expect(is_orthogonal_set(gs.vectors).orthogonal, "key Gram-Schmidt pairwise orthogonal");
        c.expect(spans_equal(gs.vectors, "(0,0,1,1) (1,0,0,0) (0,-1,1/2,-1/2)"), "key Gram-Schmidt span equals the key's set");
    });
}

void errata(Checker& c) {
    c.section("adjugate correction", [&] {
        const Matrix a = M("1 0 2; 2 1 -2; 0 0 2");
        Matrix oracle(1, 1);
        c.expect(naive_inverse(a, oracle), "adjugate correction oracle finds an inverse");
        c.expect(cofactor_matrix(a) == M("2 -4 0; 0 2 0; -2 6 1"), "adjugate correction corrected cofactors");
        c.expect(adjoint(a) == M("2 0 -2; -4 2 6; 0 0 1"), "adjugate correction corrected adjugate");
        c.expect(inverse_adjoint(a) == oracle && oracle == M("1 0 -1; -2 1 3; 0 0 1/2"),
                 "adjugate correction adjoint inverse matches Gauss-Jordan oracle");
        c.expect(multiply(a, adjoint(a)) == scale(det(a), Matrix::identity(3)), "adjugate correction A adj(A) = det(A) I");
    });
    c.section("Gram-Schmidt W3 correction", [&] {
        const Matrix w1 = V("1 0 1 1"), w2 = V("-1/3 1 -1/3 2/3"), w3 = V("-2/5 1/5 3/5 -1/5");
        const auto gs = gram_schmidt(Vs("(1,0,1,1) (0,1,0,1) (0,1,1,1)"));
        c.expect(gs.vectors.at(2) == w3, "Gram-Schmidt corrected W3");
        c.expect(dot(w3, w1) == 0 && dot(w3, w2) == 0, "Gram-Schmidt W3 correction . W1 = W3 . W2 = 0");
        const Matrix printed = V("-4/15 -1/5 11/15 -7/15");
        c.expect(dot(printed, w1) == 0 && dot(printed, w2) != 0, "Gram-Schmidt printed W3 fails W3 . W2 = 0");
    });
    c.section("inverse row-op sign", [&] {
        const RowOp forward = RowOp::add_multiple(0, -3, 1);
        const Matrix z = M("1 2 3 4; 0 1 -1 2; 0 1 1 3");
        c.expect(invert_row_op(forward) == RowOp::add_multiple(0, 3, 1), "inverse row-op inverse is 3R1+R2->R2");
        c.expect(apply_row_op(apply_row_op(z, forward), invert_row_op(forward)) == z, "inverse row-op replay recovers Z");
    });
    c.section("span coefficients", [&] {
        const auto gens = Vs("(1,1,1,1) (-1,-1,0,0) (0,0,1,1)");
        const Matrix q = V("1 1 2 2");
        c.expect(add(add(gens[0], gens[1]), gens[2]) != q, "span coefficients printed alpha1 = alpha2 = alpha3 = 1 misses q");
        const auto s = solve(transpose(stack_rows(gens)), transpose(q));
        c.expect(s.kind == SolutionSet::Kind::Infinite, "span coefficients generator coefficients are not unique");
        const auto alpha = s.particular();
        c.expect(add(add(scale(alpha[0], gens[0]), scale(alpha[1], gens[1])), scale(alpha[2], gens[2])) == q,
                 "span coefficients a valid generator combination exists");
    });
    c.section("kernel versus range", [&] {
        const LinearMap t = from_matrix(M("1 0 0; 1 0 0; 0 0 1; 0 1 0"));
        c.expect(kernel(t).dimension() == 0, "kernel versus range kernel is {0}");
        c.expect(spans_equal(range(t).basis, "(1,1,0,0) (0,0,0,1) (0,0,1,0)"), "kernel versus range key's set is the range");
    });
}

}  // namespace acceptance
