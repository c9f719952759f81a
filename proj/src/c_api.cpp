#include "exactla/exactla.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "exactla/commands.hpp"
#include "exactla/determinant.hpp"
#include "exactla/eigen.hpp"
#include "exactla/error.hpp"
#include "exactla/text.hpp"
#include "exactla/vector_space.hpp"

struct xla_matrix {
    exactla::Matrix value;
};

struct xla_command {
    exactla::Command value;
};

struct xla_report {
    exactla::Report value;
};

namespace {

thread_local std::string last_error;

xla_status status_for(exactla::ErrorCode code) {
    using exactla::ErrorCode;
    switch (code) {
        case ErrorCode::MalformedScalar:
        case ErrorCode::ZeroDenominator:
        case ErrorCode::EmptyInput:
        case ErrorCode::RaggedRows:
        case ErrorCode::MalformedForm: return XLA_ERR_PARSE;
        case ErrorCode::DimensionMismatch:
        case ErrorCode::MixedDimensions:
        case ErrorCode::WrongSize: return XLA_ERR_DIMENSION;
        case ErrorCode::NotSquare: return XLA_ERR_NOT_SQUARE;
        case ErrorCode::NotInvertible:
        case ErrorCode::SingularCoefficient:
        case ErrorCode::NegativePowerOfSingular: return XLA_ERR_NOT_INVERTIBLE;
        case ErrorCode::IndexOutOfRange: return XLA_ERR_INDEX;
        case ErrorCode::UsageError: return XLA_ERR_USAGE;
        default: return XLA_ERR_DOMAIN;
    }
}

// Runs body, translating exceptions into a status and last_error.
template <typename Body>
xla_status guarded(Body body) {
    try {
        last_error.clear();
        body();
        return XLA_OK;
    } catch (const exactla::Error& e) {
        last_error = std::string(exactla::to_string(e.code())) + ": " + e.what();
        return status_for(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return XLA_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return XLA_ERR_INTERNAL;
    }
}

xla_status null_argument() {
    last_error = "null argument";
    return XLA_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
xla_status unary(const xla_matrix* a, xla_matrix** out, Fn fn) {
    if (!a || !out) return null_argument();
    return guarded([&] { *out = new xla_matrix{fn(a->value)}; });
}

template <typename Fn>
xla_status binary(const xla_matrix* a, const xla_matrix* b, xla_matrix** out, Fn fn) {
    if (!a || !b || !out) return null_argument();
    return guarded([&] { *out = new xla_matrix{fn(a->value, b->value)}; });
}

}  // namespace

extern "C" {

const char* xla_version(void) { return "1.0.0"; }

const char* xla_last_error(void) { return last_error.c_str(); }

void xla_string_free(char* s) { std::free(s); }

xla_status xla_matrix_parse(const char* text, xla_matrix** out) {
    if (!text || !out) return null_argument();
    return guarded([&] { *out = new xla_matrix{exactla::parse_matrix_text(text).matrix}; });
}

xla_status xla_matrix_identity(size_t n, xla_matrix** out) {
    if (!out) return null_argument();
    return guarded([&] { *out = new xla_matrix{exactla::Matrix::identity(n)}; });
}

void xla_matrix_free(xla_matrix* m) { delete m; }

size_t xla_matrix_rows(const xla_matrix* m) { return m ? m->value.rows() : 0; }

size_t xla_matrix_cols(const xla_matrix* m) { return m ? m->value.cols() : 0; }

xla_status xla_matrix_entry(const xla_matrix* m, size_t row, size_t col, char** out) {
    if (!m || !out) return null_argument();
    return guarded([&] { *out = copy_string(m->value.at(row, col).to_string()); });
}

xla_status xla_matrix_render(const xla_matrix* m, char** out) {
    if (!m || !out) return null_argument();
    return guarded([&] { *out = copy_string(exactla::render_inline(m->value)); });
}

xla_status xla_matrix_add(const xla_matrix* a, const xla_matrix* b, xla_matrix** out) {
    return binary(a, b, out, [](const auto& x, const auto& y) { return exactla::add(x, y); });
}

xla_status xla_matrix_sub(const xla_matrix* a, const xla_matrix* b, xla_matrix** out) {
    return binary(a, b, out, [](const auto& x, const auto& y) { return exactla::subtract(x, y); });
}

xla_status xla_matrix_multiply(const xla_matrix* a, const xla_matrix* b, xla_matrix** out) {
    return binary(a, b, out, [](const auto& x, const auto& y) { return exactla::multiply(x, y); });
}

xla_status xla_matrix_transpose(const xla_matrix* a, xla_matrix** out) {
    return unary(a, out, [](const auto& x) { return exactla::transpose(x); });
}

xla_status xla_matrix_scale(const char* scalar, const xla_matrix* a, xla_matrix** out) {
    if (!scalar) return null_argument();
    return unary(a, out, [&](const auto& x) { return exactla::scale(exactla::Rational::parse(scalar), x); });
}

xla_status xla_det(const xla_matrix* a, char** out) {
    if (!a || !out) return null_argument();
    return guarded([&] { *out = copy_string(exactla::det(a->value).to_string()); });
}

xla_status xla_inverse(const xla_matrix* a, xla_matrix** out) {
    return unary(a, out, [](const auto& x) { return exactla::inverse_gauss_jordan(x); });
}

xla_status xla_adjoint(const xla_matrix* a, xla_matrix** out) {
    return unary(a, out, [](const auto& x) { return exactla::adjoint(x); });
}

xla_status xla_rank(const xla_matrix* a, size_t* out) {
    if (!a || !out) return null_argument();
    return guarded([&] { *out = exactla::fundamental_subspaces(a->value).rank; });
}

xla_status xla_matrix_power(const xla_matrix* a, long k, xla_matrix** out) {
    return unary(a, out, [&](const auto& x) { return exactla::matrix_power(x, k); });
}

xla_status xla_command_new(const char* verb, xla_command** out) {
    if (!verb || !out) return null_argument();
    return guarded([&] {
        auto* c = new xla_command{};
        c->value.verb = verb;
        *out = c;
    });
}

xla_status xla_command_add_input(xla_command* c, const char* text) {
    if (!c || !text) return null_argument();
    return guarded([&] { c->value.inputs.emplace_back(text); });
}

xla_status xla_command_set_flag(xla_command* c, const char* name, const char* value) {
    if (!c || !name) return null_argument();
    const std::string flag = name;
    if (flag == "trace") {
        c->value.trace = true;
        return XLA_OK;
    }
    if (!value) return null_argument();
    if (flag == "form") {
        c->value.form = value;
    } else if (flag == "method") {
        c->value.method = value;
    } else if (flag == "entry") {
        c->value.entry = value;
    } else if (flag == "power") {
        c->value.power = value;
    } else if (flag == "format") {
        c->value.format = value;
    } else {
        last_error = "unknown flag '" + flag + "'";
        return XLA_ERR_USAGE;
    }
    return XLA_OK;
}

xla_status xla_command_run(const xla_command* c, xla_report** out) {
    if (!c || !out) return null_argument();
    return guarded([&] { *out = new xla_report{exactla::run(c->value)}; });
}

void xla_command_free(xla_command* c) { delete c; }

int xla_report_exit_code(const xla_report* r) { return r ? r->value.exit_code : 2; }

const char* xla_report_output(const xla_report* r) { return r ? r->value.output.c_str() : ""; }

const char* xla_report_error(const xla_report* r) { return r ? r->value.error.c_str() : ""; }

void xla_report_free(xla_report* r) { delete r; }

}  // extern "C"
