#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exactla/rational.hpp"

namespace exactla {

// constant + sum(coefficients[i] * parameter_i)
struct LinearForm {
    Rational constant;
    std::vector<Rational> coefficients;

    Rational evaluate(std::span<const Rational> values) const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct FormSystem {
    std::vector<std::string> parameters;
    std::vector<LinearForm> forms;
};

// Parses comma-separated coordinate expressions such as "a, -2a+b, -a" or
// "(-5x1, 2x2+x3, -x1, 0)". Variables are a lowercase letter optionally
// followed by digits. When `parameters` is not given they are inferred:
// a single indexed family x1..xk yields k parameters (gaps included),
// otherwise the distinct names sorted.
// Throws MalformedForm on bad syntax and NonLinearCoordinate on powers or
// products of variables.
FormSystem parse_forms(std::string_view text, const std::optional<std::vector<std::string>>& parameters = std::nullopt);

std::string render_form(const LinearForm& form, std::span<const std::string> parameters);

}  // namespace exactla
