// Shared test helpers: literal parsing, seeded generators and oracles that
// do not reuse the library's own algorithms.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "exactla/matrix.hpp"
#include "exactla/text.hpp"

namespace testing_support {

using exactla::Matrix;
using exactla::Rational;

inline Matrix M(const std::string& text) { return exactla::parse_matrix_text(text).matrix; }
inline Matrix V(const std::string& text) { return exactla::parse_vector(text); }
inline Rational Q(const std::string& text) { return Rational::parse(text); }

inline std::vector<Matrix> Vs(const std::string& text) { return exactla::parse_vector_list(text); }

// Leibniz formula over all permutations.
inline Rational leibniz_det(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Textbook Gauss-Jordan on a plain grid, written independently of reduce().
// Returns false when singular.
inline bool naive_inverse(const Matrix& a, Matrix& out) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g[i][j] = a(i, j);
        g[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && g[p][c].is_zero()) ++p;
        if (p == n) return false;
        std::swap(g[p], g[c]);
        const Rational inv = g[c][c].reciprocal();
        for (auto& x : g[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || g[r][c].is_zero()) continue;
            const Rational f = g[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) g[r][j] -= f * g[c][j];
        }
    }
    out = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = g[i][n + j];
    return true;
}

// Rank by naive forward elimination on a copy.
inline std::size_t naive_rank(const Matrix& a) {
    std::vector<std::vector<Rational>> g;
    for (std::size_t i = 0; i < a.rows(); ++i) g.push_back(a.row(i));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < g.size(); ++c) {
        std::size_t p = rank;
        while (p < g.size() && g[p][c].is_zero()) ++p;
        if (p == g.size()) continue;
        std::swap(g[p], g[rank]);
        for (std::size_t r = rank + 1; r < g.size(); ++r) {
            const Rational f = g[r][c] / g[rank][c];
            for (std::size_t j = c; j < a.cols(); ++j) g[r][j] -= f * g[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline Matrix repeated_product(const Matrix& a, int k) {
    Matrix out = Matrix::identity(a.rows());
    for (int i = 0; i < k; ++i) out = exactla::multiply(out, a);
    return out;
}

inline bool is_identity(const Matrix& m) { return m.is_square() && m == Matrix::identity(m.rows()); }

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    // Small integers with an occasional fraction; zeros are common on purpose.
    Rational scalar(int range = 5) {
        const int num = integer(-range, range);
        if (coin(0.2)) return Rational(num) / Rational(integer(1, 4));
        return num;
    }

    Rational nonzero_scalar(int range = 5) {
        Rational r;
        while (r.is_zero()) r = scalar(range);
        return r;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, int range = 5) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(range);
        return m;
    }

    Matrix invertible(std::size_t n, int range = 5) {
        while (true) {
            Matrix m = matrix(n, n, range);
            if (!leibniz_det(m).is_zero()) return m;
        }
    }

    // Rank-deficient sometimes: later rows may be combinations of earlier ones.
    Matrix structured(std::size_t rows, std::size_t cols) {
        Matrix m = matrix(rows, cols);
        for (std::size_t i = 1; i < rows; ++i) {
            if (!coin(0.3)) continue;
            const std::size_t src = index(0, i - 1);
            const Rational f = scalar();
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = f * m(src, j);
        }
        return m;
    }

private:
    std::mt19937 rng_;
};

}  // namespace testing_support
