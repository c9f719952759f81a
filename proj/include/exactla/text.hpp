#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactla/matrix.hpp"

namespace exactla {

// Rows are separated by ';' or newlines, entries by whitespace (commas are
// accepted as separators too). A '|' splits off an augmented block and must
// sit at the same column in every row. '#' starts a comment.
struct ParsedMatrix {
    Matrix matrix;
    std::optional<std::size_t> augmented_at;  // number of columns left of '|'
};

ParsedMatrix parse_matrix_text(std::string_view text);

// Either parenthesized groups "(1, -1, 0) (2, 2, 1)" or matrix rows.
// Every vector is returned as a row vector.
std::vector<Matrix> parse_vector_list(std::string_view text);
Matrix parse_vector(std::string_view text);

// "2 1 3; 0 1 5"
std::string render_inline(const Matrix& m);
// One row per line, columns right-aligned; optional '|' after `augmented_at` columns.
std::string render_block(const Matrix& m, std::optional<std::size_t> augmented_at = std::nullopt,
                         const std::string& indent = "");
// "(1, -2, 3)"
std::string render_tuple(const std::vector<Rational>& v);
inline std::string render_tuple(const Matrix& v) { return render_tuple(v.entries()); }

}  // namespace exactla
