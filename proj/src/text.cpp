#include "exactla/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "exactla/error.hpp"

namespace exactla {

namespace {

std::vector<std::string> split_rows(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream parts(line);
        std::string row;
        while (std::getline(parts, row, ';')) rows.push_back(row);
    }
    return rows;
}

std::vector<Rational> parse_entries(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<Rational> out;
    std::string token;
    while (in >> token) out.push_back(Rational::parse(token));
    return out;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

ParsedMatrix parse_matrix_text(std::string_view text) {
    std::vector<std::vector<Rational>> grid;
    std::optional<std::size_t> bar;
    bool first = true;
    for (const auto& row : split_rows(text)) {
        if (blank(row)) continue;
        const auto pipe = row.find('|');
        std::vector<Rational> entries;
        std::optional<std::size_t> here;
        if (pipe == std::string::npos) {
            entries = parse_entries(row);
        } else {
            if (row.find('|', pipe + 1) != std::string::npos) fail(ErrorCode::RaggedRows, "more than one '|' in a row");
            entries = parse_entries(row.substr(0, pipe));
            here = entries.size();
            auto right = parse_entries(row.substr(pipe + 1));
            entries.insert(entries.end(), right.begin(), right.end());
        }
        if (first) {
            bar = here;
            first = false;
        } else if (bar != here) {
            fail(ErrorCode::RaggedRows, "augmented bar is not in the same column on every row");
        }
        if (!grid.empty() && entries.size() != grid.front().size()) {
            fail(ErrorCode::RaggedRows, "row " + std::to_string(grid.size() + 1) + " has " +
                                            std::to_string(entries.size()) + " entries, expected " +
                                            std::to_string(grid.front().size()));
        }
        grid.push_back(std::move(entries));
    }
    if (grid.empty() || grid.front().empty()) fail(ErrorCode::EmptyInput, "no matrix entries");
    return {Matrix(grid), bar};
}

std::vector<Matrix> parse_vector_list(std::string_view text) {
    if (text.find('(') == std::string_view::npos) {
        const Matrix m = parse_matrix_text(text).matrix;
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(Matrix::row_vector(m.row(i)));
        return out;
    }
    std::vector<Matrix> out;
    std::size_t pos = 0;
    while (true) {
        const auto open = text.find('(', pos);
        // anything between groups other than separators is an error
        const auto gap = text.substr(pos, open == std::string_view::npos ? std::string_view::npos : open - pos);
        for (char c : gap) {
            if (!std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != ';') {
                fail(ErrorCode::MalformedScalar, "unexpected '" + std::string(1, c) + "' between vectors");
            }
        }
        if (open == std::string_view::npos) break;
        const auto close = text.find(')', open);
        if (close == std::string_view::npos) fail(ErrorCode::MalformedScalar, "unbalanced '('");
        auto entries = parse_entries(std::string(text.substr(open + 1, close - open - 1)));
        if (entries.empty()) fail(ErrorCode::EmptyInput, "empty vector '()'");
        out.push_back(Matrix::row_vector(entries));
        pos = close + 1;
    }
    if (out.empty()) fail(ErrorCode::EmptyInput, "no vectors given");
    for (const auto& v : out) {
        if (v.cols() != out.front().cols()) fail(ErrorCode::MixedDimensions, "vectors have different dimensions");
    }
    return out;
}

Matrix parse_vector(std::string_view text) {
    auto list = parse_vector_list(text);
    if (list.size() == 1) return list.front();
    // a column written one entry per row
    const Matrix stacked = stack_rows(list);
    if (stacked.cols() == 1) return transpose(stacked);
    fail(ErrorCode::DimensionMismatch, "expected a single vector");
}

std::string render_inline(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " ";
            out += m(i, j).to_string();
        }
    }
    return out;
}

std::string render_block(const Matrix& m, std::optional<std::size_t> augmented_at, const std::string& indent) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).to_string().size());
    }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line = indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) line += augmented_at && *augmented_at == j ? " | " : "  ";
            const std::string s = m(i, j).to_string();
            line += std::string(width[j] - s.size(), ' ') + s;
        }
        out += line + "\n";
    }
    return out;
}

std::string render_tuple(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

}  // namespace exactla
