#include "exactla/eigen.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "exactla/determinant.hpp"
#include "exactla/error.hpp"

namespace exactla {

namespace {

using Mask = std::uint64_t;

// Laplace expansion along successive rows, memoised on the set of columns
// still available.
class CharPolyExpander {
public:
    explicit CharPolyExpander(const Matrix& a) : n_(a.rows()) {
        entries_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                entries_.push_back(i == j ? Polynomial::linear(a(i, j), -1) : Polynomial::constant(a(i, j)));
            }
        }
    }

    Polynomial run() { return expand(0, (n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1)); }

private:
    Polynomial expand(std::size_t row, Mask columns) {
        if (row == n_) return Polynomial::constant(1);
        if (auto it = memo_.find(columns); it != memo_.end()) return it->second;
        Polynomial sum;
        int position = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!(columns & (Mask{1} << j))) continue;
            const Polynomial& e = entries_[row * n_ + j];
            if (!e.is_zero()) {
                Polynomial term = e * expand(row + 1, columns & ~(Mask{1} << j));
                if (position % 2 == 0) {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            ++position;
        }
        memo_.emplace(columns, sum);
        return sum;
    }

    std::size_t n_;
    std::vector<Polynomial> entries_;
    std::unordered_map<Mask, Polynomial> memo_;
};

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Integer coefficients with gcd 1, same roots.
std::vector<mpz_class> primitive_integer_form(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) l = lcm(l, c.denominator());
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& c : p.coefficients()) {
        mpz_class v = c.numerator() * (l / c.denominator());
        g = gcd(g, v);
        out.push_back(v);
    }
    if (g != 0) {
        for (auto& v : out) v /= g;
    }
    return out;
}

}  // namespace

Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "characteristic polynomial needs a square matrix");
    if (a.rows() > 64) fail(ErrorCode::WrongSize, "matrix too large for cofactor expansion");
    return CharPolyExpander(a).run();
}

RationalRoots rational_roots(const Polynomial& p) {
    RationalRoots out;
    if (p.is_zero()) {
        out.residual = p;
        return out;
    }
    // zero roots
    std::size_t zero_mult = 0;
    while (p.coefficient(zero_mult).is_zero()) ++zero_mult;
    std::vector<Rational> shifted(p.coefficients().begin() + static_cast<long>(zero_mult), p.coefficients().end());
    Polynomial q(shifted);

    std::set<Rational, std::greater<>> candidates;
    if (q.degree() > 0) {
        const auto ints = primitive_integer_form(q);
        const auto num = divisors(ints.front());
        const auto den = divisors(ints.back());
        for (const auto& d : num) {
            for (const auto& e : den) {
                candidates.insert(Rational(d, e));
                candidates.insert(Rational(mpz_class(-d), e));
            }
        }
    }
    if (zero_mult > 0) candidates.insert(Rational(0));

    std::size_t total = 0;
    for (const auto& r : candidates) {
        if (r.is_zero()) {
            out.roots.push_back({r, zero_mult});
            total += zero_mult;
            continue;
        }
        std::size_t mult = 0;
        while (q.degree() > 0 && q(r).is_zero()) {
            Rational rem;
            q = q.deflate(r, rem);
            ++mult;
        }
        if (mult > 0) {
            out.roots.push_back({r, mult});
            total += mult;
        }
    }
    // q * prod (t - r) = q * (-1)^total * prod (r - t)
    out.residual = total % 2 == 0 ? q : -q;
    return out;
}

std::string render_factored(const RationalRoots& r, const std::string& var) {
    if (r.roots.empty()) return r.residual.to_string(var);
    std::string out;
    if (r.residual.degree() > 0) {
        out = "(" + r.residual.to_string(var) + ")";
    } else if (r.residual == Polynomial::constant(-1)) {
        out = "-";
    } else if (r.residual != Polynomial::constant(1)) {
        out = r.residual.to_string(var);
    }
    for (const auto& root : r.roots) {
        out += root.value.is_zero() ? "(-" + var + ")" : "(" + root.value.to_string() + " - " + var + ")";
        if (root.algebraic > 1) out += "^" + std::to_string(root.algebraic);
    }
    return out;
}

Subspace eigenspace(const Matrix& a, const Rational& lambda) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "eigenspace needs a square matrix");
    return null_space(subtract(a, scale(lambda, Matrix::identity(a.rows()))));
}

std::optional<Rational> deficient_eigenvalue(std::span<const Multiplicity> m) {
    for (const auto& e : m) {
        if (e.geometric != e.algebraic) return e.value;
    }
    return std::nullopt;
}

Diagonalization diagonalize(const Matrix& a) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "diagonalize needs a square matrix");
    Diagonalization out;
    out.char_poly = char_poly(a);
    out.roots = rational_roots(out.char_poly);
    for (const auto& r : out.roots.roots) {
        out.eigenspaces.push_back(eigenspace(a, r.value));
        out.multiplicities.push_back({r.value, r.algebraic, out.eigenspaces.back().dimension()});
    }
    if (!out.roots.splits()) {
        out.kind = Diagonalization::Kind::NotSplit;
        return out;
    }
    out.deficient = deficient_eigenvalue(out.multiplicities);
    if (out.deficient) {
        out.kind = Diagonalization::Kind::NotDiagonalizable;
        return out;
    }
    const std::size_t n = a.rows();
    Matrix l(n, n);
    Matrix d(n, n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < out.multiplicities.size(); ++k) {
        for (const auto& v : out.eigenspaces[k].basis) {
            for (std::size_t i = 0; i < n; ++i) l(i, col) = v(0, i);
            d(col, col) = out.multiplicities[k].value;
            ++col;
        }
    }
    out.kind = Diagonalization::Kind::Diagonalizable;
    out.l = l;
    out.d = d;
    return out;
}

Matrix matrix_power_by_squaring(const Matrix& a, long k) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "matrix power needs a square matrix");
    Matrix base = a;
    if (k < 0) {
        if (det(a).is_zero()) fail(ErrorCode::NegativePowerOfSingular, "negative power of a singular matrix");
        base = inverse_gauss_jordan(a);
        k = -k;
    }
    Matrix result = Matrix::identity(a.rows());
    while (k > 0) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return result;
}

Matrix matrix_power(const Matrix& a, long k) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "matrix power needs a square matrix");
    if (k < 0 && det(a).is_zero()) fail(ErrorCode::NegativePowerOfSingular, "negative power of a singular matrix");
    if (k == 0) return Matrix::identity(a.rows());
    const auto dz = diagonalize(a);
    if (dz.kind != Diagonalization::Kind::Diagonalizable) return matrix_power_by_squaring(a, k);
    Matrix dk = *dz.d;
    for (std::size_t i = 0; i < dk.rows(); ++i) dk(i, i) = dk(i, i).pow(k);
    return multiply(multiply(*dz.l, dk), inverse_gauss_jordan(*dz.l));
}

}  // namespace exactla
