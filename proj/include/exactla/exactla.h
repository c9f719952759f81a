#ifndef EXACTLA_H
#define EXACTLA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define XLA_API __declspec(dllexport)
#else
#define XLA_API __attribute__((visibility("default")))
#endif

typedef enum xla_status {
    XLA_OK = 0,
    XLA_ERR_PARSE = 1,          /* malformed scalar, ragged rows, empty input */
    XLA_ERR_DIMENSION = 2,      /* incompatible shapes */
    XLA_ERR_NOT_SQUARE = 3,
    XLA_ERR_NOT_INVERTIBLE = 4, /* singular matrix where an inverse was needed */
    XLA_ERR_INDEX = 5,
    XLA_ERR_DOMAIN = 6,         /* any other mathematical refusal */
    XLA_ERR_USAGE = 7,
    XLA_ERR_NULL_ARGUMENT = 8,
    XLA_ERR_INTERNAL = 9
} xla_status;

typedef struct xla_matrix xla_matrix;
typedef struct xla_command xla_command;
typedef struct xla_report xla_report;

XLA_API const char* xla_version(void);

/* Message for the last failing call on this thread; "" if none. */
XLA_API const char* xla_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
XLA_API void xla_string_free(char* s);

/* Same text syntax as the command line: "1 2; 3 4", '|' allowed. */
XLA_API xla_status xla_matrix_parse(const char* text, xla_matrix** out);
XLA_API xla_status xla_matrix_identity(size_t n, xla_matrix** out);
XLA_API void xla_matrix_free(xla_matrix* m);

XLA_API size_t xla_matrix_rows(const xla_matrix* m);
XLA_API size_t xla_matrix_cols(const xla_matrix* m);
/* 0-based; writes "p" or "p/q". */
XLA_API xla_status xla_matrix_entry(const xla_matrix* m, size_t row, size_t col, char** out);
/* "a b; c d" */
XLA_API xla_status xla_matrix_render(const xla_matrix* m, char** out);

XLA_API xla_status xla_matrix_add(const xla_matrix* a, const xla_matrix* b, xla_matrix** out);
XLA_API xla_status xla_matrix_sub(const xla_matrix* a, const xla_matrix* b, xla_matrix** out);
XLA_API xla_status xla_matrix_multiply(const xla_matrix* a, const xla_matrix* b, xla_matrix** out);
XLA_API xla_status xla_matrix_transpose(const xla_matrix* a, xla_matrix** out);
XLA_API xla_status xla_matrix_scale(const char* scalar, const xla_matrix* a, xla_matrix** out);

XLA_API xla_status xla_det(const xla_matrix* a, char** out);
XLA_API xla_status xla_inverse(const xla_matrix* a, xla_matrix** out);
XLA_API xla_status xla_adjoint(const xla_matrix* a, xla_matrix** out);
XLA_API xla_status xla_rank(const xla_matrix* a, size_t* out);
XLA_API xla_status xla_matrix_power(const xla_matrix* a, long k, xla_matrix** out);

/* Command layer behind the CLI. Inputs are literal text. */
XLA_API xla_status xla_command_new(const char* verb, xla_command** out);
XLA_API xla_status xla_command_add_input(xla_command* c, const char* text);
/* name: "trace" (value ignored), "form", "method", "entry", "power", "format" */
XLA_API xla_status xla_command_set_flag(xla_command* c, const char* name, const char* value);
XLA_API xla_status xla_command_run(const xla_command* c, xla_report** out);
XLA_API void xla_command_free(xla_command* c);

/* 0 answer, 1 domain error, 2 input or usage error */
XLA_API int xla_report_exit_code(const xla_report* r);
/* Borrowed; valid until xla_report_free. */
XLA_API const char* xla_report_output(const xla_report* r);
XLA_API const char* xla_report_error(const xla_report* r);
XLA_API void xla_report_free(xla_report* r);

#ifdef __cplusplus
}
#endif

#endif
