// Exercises the extern-C surface only; links against the shared library.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "exactla/exactla.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    xla_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("matrix handles") {
    xla_matrix* a = nullptr;
    REQUIRE(xla_matrix_parse("3 2; 5 7", &a) == XLA_OK);
    CHECK(xla_matrix_rows(a) == 2);
    CHECK(xla_matrix_cols(a) == 2);
    char* text = nullptr;
    REQUIRE(xla_det(a, &text) == XLA_OK);
    CHECK(take(text) == "11");

    xla_matrix* inv = nullptr;
    REQUIRE(xla_inverse(a, &inv) == XLA_OK);
    REQUIRE(xla_matrix_entry(inv, 0, 1, &text) == XLA_OK);
    CHECK(take(text) == "-2/11");

    xla_matrix* product = nullptr;
    REQUIRE(xla_matrix_multiply(a, inv, &product) == XLA_OK);
    REQUIRE(xla_matrix_render(product, &text) == XLA_OK);
    CHECK(take(text) == "1 0; 0 1");

    xla_matrix* id = nullptr;
    REQUIRE(xla_matrix_identity(2, &id) == XLA_OK);
    xla_matrix* sum = nullptr;
    REQUIRE(xla_matrix_add(a, id, &sum) == XLA_OK);
    REQUIRE(xla_matrix_render(sum, &text) == XLA_OK);
    CHECK(take(text) == "4 2; 5 8");

    size_t rank = 0;
    REQUIRE(xla_rank(a, &rank) == XLA_OK);
    CHECK(rank == 2);

    xla_matrix* scaled = nullptr;
    REQUIRE(xla_matrix_scale("1/2", a, &scaled) == XLA_OK);
    REQUIRE(xla_matrix_render(scaled, &text) == XLA_OK);
    CHECK(take(text) == "3/2 1; 5/2 7/2");

    for (xla_matrix* m : {a, inv, product, id, sum, scaled}) xla_matrix_free(m);
}

TEST_CASE("status codes") {
    xla_matrix* m = nullptr;
    CHECK(xla_matrix_parse("1 2; 3", &m) == XLA_ERR_PARSE);
    CHECK(std::string(xla_last_error()).find("RaggedRows") == 0);
    CHECK(xla_matrix_parse(nullptr, &m) == XLA_ERR_NULL_ARGUMENT);

    xla_matrix* singular = nullptr;
    REQUIRE(xla_matrix_parse("2 3; 4 6", &singular) == XLA_OK);
    xla_matrix* out = nullptr;
    CHECK(xla_inverse(singular, &out) == XLA_ERR_NOT_INVERTIBLE);
    CHECK(xla_matrix_power(singular, -1, &out) == XLA_ERR_NOT_INVERTIBLE);

    xla_matrix* wide = nullptr;
    REQUIRE(xla_matrix_parse("1 2 3", &wide) == XLA_OK);
    char* text = nullptr;
    CHECK(xla_det(wide, &text) == XLA_ERR_NOT_SQUARE);
    CHECK(xla_matrix_multiply(wide, wide, &out) == XLA_ERR_DIMENSION);
    CHECK(xla_matrix_entry(wide, 4, 0, &text) == XLA_ERR_INDEX);
    CHECK(xla_det(wide, &text) != XLA_OK);
    CHECK(xla_last_error()[0] != '\0');

    xla_matrix_free(singular);
    xla_matrix_free(wide);
    xla_matrix_free(nullptr);
}

TEST_CASE("command layer") {
    xla_command* c = nullptr;
    REQUIRE(xla_command_new("solve", &c) == XLA_OK);
    REQUIRE(xla_command_add_input(c, "3 2 | 5; -2 1 | -6") == XLA_OK);
    xla_report* r = nullptr;
    REQUIRE(xla_command_run(c, &r) == XLA_OK);
    CHECK(xla_report_exit_code(r) == 0);
    CHECK(std::string(xla_report_output(r)) == "unique: x1 = 17/7, x2 = -8/7\n");
    xla_report_free(r);

    CHECK(xla_command_set_flag(c, "colour", "red") == XLA_ERR_USAGE);
    REQUIRE(xla_command_set_flag(c, "method", "cofactor") == XLA_OK);
    REQUIRE(xla_command_run(c, &r) == XLA_OK);
    CHECK(xla_report_exit_code(r) == 2);
    CHECK(std::string(xla_report_error(r)).find("--method") != std::string::npos);
    xla_report_free(r);
    xla_command_free(c);

    CHECK(std::string(xla_version()).size() > 0);
}
