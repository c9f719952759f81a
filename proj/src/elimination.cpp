#include "exactla/elimination.hpp"

#include <algorithm>
#include <regex>

#include "exactla/error.hpp"

namespace exactla {

namespace {

std::string row_name(std::size_t i) { return "R" + std::to_string(i + 1); }

void check_rows(const RowOp& op, std::size_t n) {
    const bool two_rows = op.kind != RowOp::Kind::Scale;
    if (op.source >= n || (two_rows && op.target >= n)) {
        fail(ErrorCode::IndexOutOfRange, "row operation " + render_row_op(op) + " on a matrix with " +
                                             std::to_string(n) + " rows");
    }
}

// Coefficient prefix for rendering: 1 -> "", -1 -> "-".
std::string coefficient_prefix(const Rational& a) {
    if (a.is_one()) return "";
    if (a == Rational(-1)) return "-";
    return a.to_string();
}

Rational parse_coefficient(const std::string& text) {
    if (text.empty()) return 1;
    if (text == "-") return -1;
    return Rational::parse(text);
}

struct Reducer {
    Matrix m;
    Trace trace;

    explicit Reducer(const Matrix& start) : m(start), trace{start, start, {}} {}

    void apply(const RowOp& op) {
        m = apply_row_op(m, op);
        trace.steps.push_back({op, elementary_matrix(op, m.rows())});
    }
};

}  // namespace

RowOp RowOp::scale(std::size_t row, const Rational& alpha) { return {Kind::Scale, row, row, alpha}; }

RowOp RowOp::add_multiple(std::size_t source, const Rational& alpha, std::size_t target) {
    return {Kind::AddMultiple, source, target, alpha};
}

RowOp RowOp::swap(std::size_t a, std::size_t b) { return {Kind::Swap, a, b, 1}; }

void validate(const RowOp& op) {
    switch (op.kind) {
        case RowOp::Kind::Scale:
            if (op.alpha.is_zero()) fail(ErrorCode::ZeroScale, "row scale factor must be nonzero");
            break;
        case RowOp::Kind::AddMultiple:
            if (op.alpha.is_zero()) fail(ErrorCode::ZeroScale, "row multiple must be nonzero");
            if (op.source == op.target) fail(ErrorCode::InvalidRowOp, "row added to itself");
            break;
        case RowOp::Kind::Swap:
            if (op.source == op.target) fail(ErrorCode::InvalidRowOp, "row swapped with itself");
            break;
    }
}

Matrix apply_row_op(const Matrix& m, const RowOp& op) {
    validate(op);
    check_rows(op, m.rows());
    Matrix out = m;
    switch (op.kind) {
        case RowOp::Kind::Scale:
            for (std::size_t j = 0; j < m.cols(); ++j) out(op.source, j) *= op.alpha;
            break;
        case RowOp::Kind::AddMultiple:
            for (std::size_t j = 0; j < m.cols(); ++j) out(op.target, j) += op.alpha * m(op.source, j);
            break;
        case RowOp::Kind::Swap:
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(out(op.source, j), out(op.target, j));
            break;
    }
    return out;
}

Matrix elementary_matrix(const RowOp& op, std::size_t n) { return apply_row_op(Matrix::identity(n), op); }

RowOp invert_row_op(const RowOp& op) {
    validate(op);
    switch (op.kind) {
        case RowOp::Kind::Scale: return RowOp::scale(op.source, op.alpha.reciprocal());
        case RowOp::Kind::AddMultiple: return RowOp::add_multiple(op.source, -op.alpha, op.target);
        case RowOp::Kind::Swap: return op;
    }
    return op;
}

std::string render_row_op(const RowOp& op) {
    switch (op.kind) {
        case RowOp::Kind::Scale: return coefficient_prefix(op.alpha) + row_name(op.source);
        case RowOp::Kind::AddMultiple:
            return coefficient_prefix(op.alpha) + row_name(op.source) + "+" + row_name(op.target) + "->" +
                   row_name(op.target);
        case RowOp::Kind::Swap: return row_name(op.source) + "<->" + row_name(op.target);
    }
    return {};
}

RowOp parse_row_op(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') s += c;
    }
    static const std::regex swap_re(R"(^R(\d+)<->R(\d+)$)");
    static const std::regex add_re(R"(^(-?(?:\d+(?:/\d+|\.\d+)?)?)R(\d+)\+R(\d+)->R(\d+)$)");
    static const std::regex scale_re(R"(^(-?(?:\d+(?:/\d+|\.\d+)?)?)R(\d+)$)");

    auto index = [&](const std::string& digits) -> std::size_t {
        const unsigned long v = std::stoul(digits);
        if (v == 0) fail(ErrorCode::MalformedForm, "row numbers start at 1: '" + s + "'");
        return v - 1;
    };

    std::smatch m;
    RowOp op;
    if (std::regex_match(s, m, swap_re)) {
        op = RowOp::swap(index(m[1]), index(m[2]));
    } else if (std::regex_match(s, m, add_re)) {
        if (m[3] != m[4]) fail(ErrorCode::MalformedForm, "row operation must write back to its target: '" + s + "'");
        op = RowOp::add_multiple(index(m[2]), parse_coefficient(m[1]), index(m[3]));
    } else if (std::regex_match(s, m, scale_re)) {
        op = RowOp::scale(index(m[2]), parse_coefficient(m[1]));
    } else {
        fail(ErrorCode::MalformedForm, "unrecognised row operation '" + s + "'");
    }
    validate(op);
    return op;
}

Matrix replay(const Trace& trace) {
    Matrix m = trace.start;
    for (const auto& step : trace.steps) m = apply_row_op(m, step.op);
    return m;
}

Matrix left_factor(const Trace& trace) {
    Matrix acc = Matrix::identity(trace.start.rows());
    for (const auto& step : trace.steps) acc = multiply(step.elementary, acc);
    return acc;
}

std::string_view to_string(Form f) {
    switch (f) {
        case Form::SemiReduced: return "semi_reduced";
        case Form::Reduced: return "reduced";
        case Form::CompletelyReduced: return "completely_reduced";
        case Form::Echelon: return "echelon";
        case Form::ReducedEchelon: return "reduced_echelon";
    }
    return "reduced";
}

Form parse_form(std::string_view name) {
    std::string n(name);
    std::replace(n.begin(), n.end(), '-', '_');
    for (Form f : {Form::SemiReduced, Form::Reduced, Form::CompletelyReduced, Form::Echelon, Form::ReducedEchelon}) {
        if (n == to_string(f)) return f;
    }
    if (n == "rref") return Form::ReducedEchelon;
    fail(ErrorCode::UsageError, "unknown form '" + std::string(name) + "'");
}

std::optional<std::size_t> leader_column(const Matrix& m, std::size_t row) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) return j;
    }
    return std::nullopt;
}

Reduction reduce(const Matrix& start, Form form, std::optional<std::size_t> column_limit) {
    const bool normalize = form != Form::SemiReduced;
    const bool clear_above = form == Form::CompletelyReduced || form == Form::ReducedEchelon;
    const std::size_t columns = std::min(start.cols(), column_limit.value_or(start.cols()));

    Reducer r(start);
    for (std::size_t p = 0; p < start.rows(); ++p) {
        // each row's leader is its first nonzero entry at the time it is reached
        std::optional<std::size_t> leader;
        for (std::size_t c = 0; c < columns; ++c) {
            if (!r.m(p, c).is_zero()) {
                leader = c;
                break;
            }
        }
        if (!leader) continue;
        const std::size_t c = *leader;
        if (normalize && !r.m(p, c).is_one()) r.apply(RowOp::scale(p, r.m(p, c).reciprocal()));

        // Row p already holds 0 in every earlier leader column, so clearing
        // column c elsewhere cannot disturb earlier leaders.
        for (std::size_t i = p + 1; i < start.rows(); ++i) {
            if (r.m(i, c).is_zero()) continue;
            r.apply(RowOp::add_multiple(p, -r.m(i, c) / r.m(p, c), i));
        }
        if (clear_above) {
            for (std::size_t i = 0; i < p; ++i) {
                if (r.m(i, c).is_zero()) continue;
                r.apply(RowOp::add_multiple(p, -r.m(i, c) / r.m(p, c), i));
            }
        }
    }

    if (form == Form::Echelon || form == Form::ReducedEchelon) {
        // selection sort on leader column, zero rows last, swaps only
        auto key = [&](std::size_t i) { return leader_column(r.m, i).value_or(start.cols()); };
        for (std::size_t slot = 0; slot < start.rows(); ++slot) {
            std::size_t best = slot;
            for (std::size_t i = slot + 1; i < start.rows(); ++i) {
                if (key(i) < key(best)) best = i;
            }
            if (best != slot) r.apply(RowOp::swap(slot, best));
        }
    }

    r.trace.end = r.m;
    return {r.m, std::move(r.trace)};
}

bool satisfies_form(const Matrix& m, Form form) {
    const std::size_t n = m.rows();
    std::vector<std::optional<std::size_t>> leaders(n);
    for (std::size_t i = 0; i < n; ++i) leaders[i] = leader_column(m, i);

    auto zeros_below = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            if (!leaders[i]) continue;
            for (std::size_t k = i + 1; k < n; ++k) {
                if (!m(k, *leaders[i]).is_zero()) return false;
            }
        }
        return true;
    };
    auto zeros_everywhere_else = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            if (!leaders[i]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i && !m(k, *leaders[i]).is_zero()) return false;
            }
        }
        return true;
    };
    auto unit_leaders = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            if (leaders[i] && !m(i, *leaders[i]).is_one()) return false;
        }
        return true;
    };
    auto staircase = [&] {
        std::optional<std::size_t> last;
        bool seen_zero_row = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!leaders[i]) {
                seen_zero_row = true;
                continue;
            }
            if (seen_zero_row) return false;
            if (last && *leaders[i] <= *last) return false;
            last = leaders[i];
        }
        return true;
    };

    switch (form) {
        case Form::SemiReduced: return zeros_below();
        case Form::Reduced: return zeros_below() && unit_leaders();
        case Form::CompletelyReduced: return zeros_everywhere_else() && unit_leaders();
        case Form::Echelon: return staircase();
        case Form::ReducedEchelon: return staircase() && zeros_everywhere_else() && unit_leaders();
    }
    return false;
}

std::vector<Rational> SolutionSet::evaluate(const std::vector<Rational>& free_values) const {
    if (kind == Kind::Inconsistent) fail(ErrorCode::InvalidRowOp, "inconsistent system has no solutions");
    if (free_values.size() != free_vars.size() && !(free_values.empty())) {
        fail(ErrorCode::DimensionMismatch, "wrong number of free-variable values");
    }
    std::vector<Rational> x(variables);
    for (std::size_t f = 0; f < free_vars.size(); ++f) x[free_vars[f]] = free_values.empty() ? Rational{} : free_values[f];
    for (std::size_t l = 0; l < leading.size(); ++l) {
        Rational v = parametric[l].constant;
        for (std::size_t f = 0; f < free_vars.size(); ++f) v += parametric[l].free_coefficients[f] * x[free_vars[f]];
        x[leading[l]] = v;
    }
    return x;
}

std::vector<Rational> SolutionSet::particular() const { return evaluate({}); }

SolutionSet solve(const Matrix& coefficients, const Matrix& constants) {
    if (constants.cols() != 1 || constants.rows() != coefficients.rows()) {
        fail(ErrorCode::DimensionMismatch, "constants must be a column with one entry per equation");
    }
    const std::size_t n = coefficients.cols();
    auto red = reduce(augment(coefficients, constants), Form::CompletelyReduced, n);

    SolutionSet out;
    out.variables = n;
    out.reduced = red.result;
    out.trace = std::move(red.trace);

    const Matrix& m = out.reduced;
    std::vector<std::optional<std::size_t>> row_of_leader(n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto lead = leader_column(m, i);
        if (!lead) continue;
        if (*lead == n) {
            out.kind = SolutionSet::Kind::Inconsistent;
            return out;
        }
        row_of_leader[*lead] = i;
    }
    for (std::size_t j = 0; j < n; ++j) (row_of_leader[j] ? out.leading : out.free_vars).push_back(j);
    for (std::size_t j : out.leading) {
        const std::size_t i = *row_of_leader[j];
        ParametricValue pv;
        pv.constant = m(i, n);
        for (std::size_t f : out.free_vars) pv.free_coefficients.push_back(-m(i, f));
        out.parametric.push_back(std::move(pv));
    }
    out.kind = out.free_vars.empty() ? SolutionSet::Kind::Unique : SolutionSet::Kind::Infinite;
    return out;
}

Matrix inverse_gauss_jordan(const Matrix& a) {
    if (!a.is_square()) fail(ErrorCode::NotSquare, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const auto red = reduce(augment(a, Matrix::identity(n)), Form::ReducedEchelon, n);
    if (red.result.column_block(0, n) != Matrix::identity(n)) {
        fail(ErrorCode::NotInvertible, "matrix is not invertible");
    }
    return red.result.column_block(n, n);
}

}  // namespace exactla
