#include "exactla/linear_form.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "exactla/error.hpp"

namespace exactla {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

struct Term {
    Rational coefficient;
    std::string variable;  // empty for a constant
};

// One coordinate expression, whitespace already removed.
class ExpressionParser {
public:
    explicit ExpressionParser(std::string text) : s_(std::move(text)) {}

    std::vector<Term> parse() {
        if (s_.empty()) fail(ErrorCode::MalformedForm, "empty coordinate");
        std::vector<Term> terms;
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                bad("expected + or -");
            }
            first = false;
            Term t = term();
            t.coefficient *= sign;
            terms.push_back(std::move(t));
        }
        return terms;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void bad(const std::string& why) const {
        fail(ErrorCode::MalformedForm, why + " in '" + s_ + "'");
    }

    [[noreturn]] void nonlinear() const {
        fail(ErrorCode::NonLinearCoordinate, "'" + s_ + "' is not a linear combination of the variables");
    }

    std::optional<Rational> number() {
        const std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        if (pos_ == start) return std::nullopt;
        if ((peek() == '/' || peek() == '.') && pos_ + 1 < s_.size() && is_digit(s_[pos_ + 1])) {
            ++pos_;
            while (is_digit(peek())) ++pos_;
        }
        return Rational::parse(std::string_view(s_).substr(start, pos_ - start));
    }

    std::optional<std::string> variable() {
        if (!is_lower(peek())) return std::nullopt;
        std::string name(1, s_[pos_++]);
        while (is_digit(peek())) name += s_[pos_++];
        return name;
    }

    Term term() {
        Term t{1, {}};
        const auto coefficient = number();
        if (coefficient) t.coefficient = *coefficient;
        if (coefficient && peek() == '*') {
            ++pos_;
            if (!is_lower(peek())) bad("expected a variable after '*'");
        }
        if (const auto name = variable()) {
            t.variable = *name;
            if (peek() == '/') {
                ++pos_;
                const auto divisor = number();
                if (!divisor) bad("expected a number after '/'");
                if (divisor->is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero in '" + s_ + "'");
                t.coefficient /= *divisor;
            }
            // anything that multiplies or raises a variable is nonlinear
            if (peek() == '^' || peek() == '*' || is_lower(peek()) || peek() == '(') nonlinear();
        } else if (!coefficient) {
            if (peek() == '(' || peek() == '^') nonlinear();
            bad("expected a term");
        } else if (peek() == '^') {
            bad("powers of constants are not supported");
        }
        if (peek() != '\0' && peek() != '+' && peek() != '-') {
            if (peek() == '^' || peek() == '*' || peek() == '(') nonlinear();
            bad("unexpected '" + std::string(1, peek()) + "'");
        }
        return t;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_coordinates(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

std::vector<std::string> infer_parameters(const std::set<std::string>& names) {
    if (names.empty()) return {};
    // indexed family: every name is the same letter followed by digits
    const char letter = names.begin()->front();
    bool indexed = true;
    unsigned long highest = 0;
    for (const auto& n : names) {
        if (n.front() != letter || n.size() < 2) {
            indexed = false;
            break;
        }
        highest = std::max(highest, std::stoul(n.substr(1)));
    }
    if (indexed && highest > 0) {
        std::vector<std::string> out;
        for (unsigned long i = 1; i <= highest; ++i) out.push_back(std::string(1, letter) + std::to_string(i));
        if (std::all_of(names.begin(), names.end(),
                        [&](const std::string& n) { return std::find(out.begin(), out.end(), n) != out.end(); })) {
            return out;
        }
    }
    return {names.begin(), names.end()};
}

}  // namespace

Rational LinearForm::evaluate(std::span<const Rational> values) const {
    if (values.size() != coefficients.size()) fail(ErrorCode::DimensionMismatch, "wrong number of parameter values");
    Rational v = constant;
    for (std::size_t i = 0; i < values.size(); ++i) v += coefficients[i] * values[i];
    return v;
}

FormSystem parse_forms(std::string_view text, const std::optional<std::vector<std::string>>& parameters) {
    std::vector<std::vector<Term>> parsed;
    std::set<std::string> names;
    for (const auto& coord : split_coordinates(text)) {
        parsed.push_back(ExpressionParser(coord).parse());
        for (const auto& t : parsed.back()) {
            if (!t.variable.empty()) names.insert(t.variable);
        }
    }

    FormSystem out;
    out.parameters = parameters ? *parameters : infer_parameters(names);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.parameters.size(); ++i) index[out.parameters[i]] = i;
    for (const auto& n : names) {
        if (!index.contains(n)) fail(ErrorCode::MalformedForm, "unknown variable '" + n + "'");
    }

    for (const auto& terms : parsed) {
        LinearForm f;
        f.coefficients.assign(out.parameters.size(), Rational{});
        for (const auto& t : terms) {
            if (t.variable.empty()) {
                f.constant += t.coefficient;
            } else {
                f.coefficients[index.at(t.variable)] += t.coefficient;
            }
        }
        out.forms.push_back(std::move(f));
    }
    return out;
}

std::string render_form(const LinearForm& form, std::span<const std::string> parameters) {
    std::string out;
    auto append = [&](const Rational& c, const std::string& name) {
        if (c.is_zero()) return;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (name.empty() || !mag.is_one()) out += mag.to_string();
        out += name;
    };
    for (std::size_t i = 0; i < form.coefficients.size(); ++i) append(form.coefficients[i], parameters[i]);
    append(form.constant, "");
    return out.empty() ? "0" : out;
}

}  // namespace exactla
