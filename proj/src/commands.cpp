#include "exactla/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "exactla/determinant.hpp"
#include "exactla/eigen.hpp"
#include "exactla/error.hpp"
#include "exactla/inner_product.hpp"
#include "exactla/linear_transform.hpp"
#include "exactla/text.hpp"

namespace exactla {

namespace {

using json = nlohmann::ordered_json;

struct Output {
    std::string plain;
    json data = json::object();
};

// ---- rendering helpers -------------------------------------------------

json jscalar(const Rational& r) { return r.to_string(); }

json jvector(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(jscalar(x));
    return out;
}

json jvector(const Matrix& v) { return jvector(v.entries()); }

json jmatrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(jvector(m.row(i)));
    return out;
}

json jvectors(const std::vector<Matrix>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(jvector(v));
    return out;
}

json jtrace(const Trace& t) {
    json out = json::array();
    for (const auto& s : t.steps) out.push_back({{"op", render_row_op(s.op)}, {"elementary", jmatrix(s.elementary)}});
    return out;
}

std::string variable(std::size_t j) { return "x" + std::to_string(j + 1); }

std::string plain_trace(const Trace& t, std::optional<std::size_t> bar) {
    std::string out = "trace:\n";
    if (t.steps.empty()) out += "  (no row operations)\n";
    for (const auto& s : t.steps) out += "  " + render_row_op(s.op) + " :: E = " + render_inline(s.elementary) + "\n";
    out += "final:\n" + render_block(t.end, bar, "  ");
    return out;
}

std::string plain_vectors(const std::vector<Matrix>& vs, const std::string& indent = "  ") {
    if (vs.empty()) return indent + "(none)\n";
    std::string out;
    for (const auto& v : vs) out += indent + render_tuple(v) + "\n";
    return out;
}

// "c + a x3 - b x5" with the constant first
std::string affine(const Rational& constant, const std::vector<Rational>& coefficients,
                   const std::vector<std::string>& names) {
    std::string out;
    if (!constant.is_zero()) out = constant.to_string();
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const Rational& c = coefficients[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!c.abs().is_one()) out += c.abs().to_string() + " ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

// ---- input helpers ------------------------------------------------------

[[noreturn]] void usage(const std::string& message) { fail(ErrorCode::UsageError, message); }

void require_inputs(const Command& c, std::size_t lo, std::size_t hi) {
    if (c.inputs.size() < lo || c.inputs.size() > hi) {
        std::string expected = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        usage(c.verb + " expects " + expected + " input(s), got " + std::to_string(c.inputs.size()));
    }
}

Matrix matrix_input(const Command& c, std::size_t i) { return parse_matrix_text(c.inputs.at(i)).matrix; }

std::size_t parse_index(const std::string& s, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        usage(std::string("bad ") + what + " '" + s + "'");
    }
    if (pos != s.size() || v < 1) usage(std::string("bad ") + what + " '" + s + "' (indices start at 1)");
    return static_cast<std::size_t>(v - 1);
}

struct System {
    Matrix coefficients;
    Matrix constants;
};

// "A | b" in one input, A and b as two inputs, or the last column as b.
System system_input(const Command& c) {
    require_inputs(c, 1, 2);
    const auto parsed = parse_matrix_text(c.inputs[0]);
    const Matrix& m = parsed.matrix;
    if (c.inputs.size() == 2) {
        if (parsed.augmented_at) usage("constants given both after '|' and as a second input");
        const Matrix b = parse_vector(c.inputs[1]);
        return {m, Matrix::column_vector(b.entries())};
    }
    const std::size_t split = parsed.augmented_at.value_or(m.cols() - 1);
    if (split == 0 || m.cols() - split != 1) usage("expected exactly one constants column");
    return {m.column_block(0, split), m.column_block(split, 1)};
}

LinearMap map_input(const std::string& text) {
    if (text.find("->") != std::string::npos) {
        std::vector<std::pair<Matrix, Matrix>> pairs;
        std::string normalized = text;
        std::replace(normalized.begin(), normalized.end(), '\n', ';');
        std::istringstream parts(normalized);
        std::string item;
        while (std::getline(parts, item, ';')) {
            if (item.find_first_not_of(" \t\r") == std::string::npos) continue;
            const auto arrow = item.find("->");
            if (arrow == std::string::npos) fail(ErrorCode::MalformedForm, "expected 'point -> image' in '" + item + "'");
            pairs.emplace_back(parse_vector(item.substr(0, arrow)), parse_vector(item.substr(arrow + 2)));
        }
        return from_basis_images(pairs);
    }
    if (std::any_of(text.begin(), text.end(), [](char ch) { return ch >= 'a' && ch <= 'z'; })) {
        const auto verdict = from_forms(parse_forms(text));
        if (!verdict.linear) {
            fail(ErrorCode::NonLinearCoordinate,
                 "coordinate " + std::to_string(*verdict.offending + 1) + " has a constant term");
        }
        return *verdict.map;
    }
    return from_matrix(parse_matrix_text(text).matrix);
}

// ---- verbs ---------------------------------------------------------------

Output do_solve(const Command& c) {
    const auto sys = system_input(c);
    const auto sol = solve(sys.coefficients, sys.constants);
    const std::size_t n = sol.variables;
    Output o;
    switch (sol.kind) {
        case SolutionSet::Kind::Inconsistent: {
            o.plain = "inconsistent: a row reduces to 0 = nonzero\n";
            o.data["classification"] = "inconsistent";
            break;
        }
        case SolutionSet::Kind::Unique: {
            const auto x = sol.particular();
            o.plain = "unique:";
            for (std::size_t j = 0; j < n; ++j) o.plain += (j ? ", " : " ") + variable(j) + " = " + x[j].to_string();
            o.plain += "\n";
            o.data["classification"] = "unique";
            o.data["solution"] = jvector(x);
            break;
        }
        case SolutionSet::Kind::Infinite: {
            std::vector<std::string> free_names;
            for (auto f : sol.free_vars) free_names.push_back(variable(f));
            std::vector<std::string> lead_names;
            for (auto l : sol.leading) lead_names.push_back(variable(l));
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
                return s;
            };
            o.plain = "infinite: leading " + join(lead_names) + "; free " + join(free_names) + "\n";
            json params = json::array();
            for (std::size_t l = 0; l < sol.leading.size(); ++l) {
                o.plain += "  " + lead_names[l] + " = " +
                           affine(sol.parametric[l].constant, sol.parametric[l].free_coefficients, free_names) + "\n";
                params.push_back({{"variable", lead_names[l]},
                                  {"constant", jscalar(sol.parametric[l].constant)},
                                  {"coefficients", jvector(sol.parametric[l].free_coefficients)}});
            }
            o.plain += "  particular: " + render_tuple(sol.particular()) + "\n";
            o.data["classification"] = "infinite";
            o.data["leading"] = lead_names;
            o.data["free"] = free_names;
            o.data["parametric"] = params;
            o.data["particular"] = jvector(sol.particular());
            break;
        }
    }
    if (c.trace) {
        o.plain += plain_trace(sol.trace, n);
        o.data["trace"] = jtrace(sol.trace);
        o.data["final"] = jmatrix(sol.trace.end);
    }
    return o;
}

Output reduce_with(const Command& c, Form form) {
    require_inputs(c, 1, 1);
    const auto parsed = parse_matrix_text(c.inputs[0]);
    const auto red = reduce(parsed.matrix, form);
    Output o;
    o.plain = render_block(red.result, parsed.augmented_at);
    o.data["form"] = std::string(to_string(form));
    o.data["result"] = jmatrix(red.result);
    if (c.trace) {
        o.plain += plain_trace(red.trace, parsed.augmented_at);
        o.data["trace"] = jtrace(red.trace);
    }
    return o;
}

Output not_invertible(Output o) {
    o.plain = "not invertible (det = 0)\n";
    o.data["invertible"] = false;
    o.data["det"] = "0";
    return o;
}

Output do_inverse(const Command& c) {
    require_inputs(c, 1, 1);
    const Matrix a = matrix_input(c, 0);
    const std::string method = c.method.value_or("rowred");
    if (method != "rowred" && method != "cofactor") usage("inverse --method must be rowred or cofactor");
    if (!a.is_square()) fail(ErrorCode::NotSquare, "inverse of a non-square matrix");
    Output o;
    if (det(a).is_zero()) return not_invertible(std::move(o));
    const Matrix inv = method == "rowred" ? inverse_gauss_jordan(a) : inverse_adjoint(a);
    o.plain = render_block(inv);
    o.data["invertible"] = true;
    o.data["inverse"] = jmatrix(inv);
    if (c.trace && method == "rowred") {
        const auto red = reduce(augment(a, Matrix::identity(a.rows())), Form::ReducedEchelon, a.rows());
        o.plain += plain_trace(red.trace, a.rows());
        o.data["trace"] = jtrace(red.trace);
    }
    return o;
}

Output do_det(const Command& c) {
    require_inputs(c, 1, 1);
    const Matrix a = matrix_input(c, 0);
    const std::string method = c.method.value_or("rowred");
    Output o;
    if (method == "rowred") {
        const auto r = det_with_effects(a);
        o.plain = r.value.to_string() + "\n";
        o.data["det"] = jscalar(r.value);
        if (c.trace) {
            o.plain += "effects:\n";
            if (r.log.notes.empty()) o.plain += "  (no row operations)\n";
            for (const auto& n : r.log.notes) o.plain += "  " + n + "\n";
            o.plain += "triangular:\n" + render_block(r.triangular, std::nullopt, "  ");
            o.plain += "det = " + std::string(r.log.parity < 0 ? "-1 * " : "") + "product of diagonal\n";
            o.data["trace"] = jtrace(r.trace);
            o.data["triangular"] = jmatrix(r.triangular);
            o.data["parity"] = r.log.parity;
        }
    } else if (method == "cofactor") {
        if (!a.is_square()) fail(ErrorCode::NotSquare, "determinant needs a square matrix");
        const auto line = best_expansion_line(a);
        const auto e = cofactor_expand(a, line);
        o.plain = e.value.to_string() + "\n";
        o.data["det"] = jscalar(e.value);
        const std::string name = std::string(line.kind == ExpansionLine::Kind::Row ? "row " : "column ") +
                                 std::to_string(line.index + 1);
        o.data["line"] = name;
        o.data["terms"] = jvector(e.terms);
        if (c.trace) {
            o.plain += "expanded along " + name + ":";
            for (std::size_t i = 0; i < e.terms.size(); ++i) o.plain += (i ? " + " : " ") + e.terms[i].to_string();
            o.plain += "\n";
        }
    } else {
        usage("det --method must be rowred or cofactor");
    }
    return o;
}

Output matrix_result(const Matrix& m, const char* key) {
    Output o;
    o.plain = render_block(m);
    o.data[key] = jmatrix(m);
    return o;
}

Output do_cramer(const Command& c) {
    const auto sys = system_input(c);
    Output o;
    if (!sys.coefficients.is_square()) fail(ErrorCode::NotSquare, "Cramer's rule needs a square coefficient matrix");
    if (det(sys.coefficients).is_zero()) {
        o.plain = "no unique solution (det = 0)\n";
        o.data["unique"] = false;
        return o;
    }
    const auto x = cramer_solve(sys.coefficients, sys.constants);
    o.plain = "unique:";
    for (std::size_t j = 0; j < x.size(); ++j) o.plain += (j ? ", " : " ") + variable(j) + " = " + x[j].to_string();
    o.plain += "\n";
    o.data["unique"] = true;
    o.data["solution"] = jvector(x);
    return o;
}

Output do_inv_entry(const Command& c) {
    require_inputs(c, 1, 1);
    if (!c.entry) usage("inv-entry needs --entry i,k");
    const auto comma = c.entry->find(',');
    if (comma == std::string::npos) usage("--entry expects i,k");
    const std::size_t i = parse_index(c.entry->substr(0, comma), "row index");
    const std::size_t k = parse_index(c.entry->substr(comma + 1), "column index");
    const Matrix a = matrix_input(c, 0);
    if (!a.is_square()) fail(ErrorCode::NotSquare, "inverse entry needs a square matrix");
    Output o;
    if (det(a).is_zero()) return not_invertible(std::move(o));
    const Rational v = inverse_entry(a, i, k);
    o.plain = v.to_string() + "\n";
    o.data["entry"] = {i + 1, k + 1};
    o.data["value"] = jscalar(v);
    return o;
}

Output do_basis(const Command& c) {
    require_inputs(c, 1, 1);
    const auto vs = parse_vector_list(c.inputs[0]);
    const auto ind = independence(vs);
    const auto space = basis_of_span(vs);
    Output o;
    if (ind.independent) {
        o.plain = "independent\n";
    } else {
        o.plain = "dependent: vector " + std::to_string(*ind.witness + 1) + " reduces to zero\n";
    }
    o.plain += "dim = " + std::to_string(space.dimension()) + "\nbasis:\n" + plain_vectors(space.basis);
    o.data["independent"] = ind.independent;
    if (ind.witness) o.data["witness"] = *ind.witness + 1;
    o.data["dimension"] = space.dimension();
    o.data["basis"] = jvectors(space.basis);
    return o;
}

Output do_span_member(const Command& c) {
    require_inputs(c, 2, 2);
    const auto gens = parse_vector_list(c.inputs[0]);
    const Matrix q = parse_vector(c.inputs[1]);
    const auto space = basis_of_span(gens);
    const auto m = span_contains(space, q);
    Output o;
    o.data["member"] = m.member;
    o.data["basis"] = jvectors(space.basis);
    if (!m.member) {
        o.plain = "no: " + render_tuple(q) + " is not in the span\n";
        return o;
    }
    o.plain = "yes: " + render_tuple(q) + " =";
    if (space.basis.empty()) o.plain += " 0";
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
        o.plain += (i ? " + " : " ") + m.coefficients[i].to_string() + "*" + render_tuple(space.basis[i]);
    }
    o.plain += "\n";
    o.data["coefficients"] = jvector(m.coefficients);
    return o;
}

Output do_extend_basis(const Command& c) {
    require_inputs(c, 1, 1);
    const auto vs = parse_vector_list(c.inputs[0]);
    const std::size_t n = vs.front().cols();
    const auto full = extend_to_basis(vs, n);
    Output o;
    o.plain = "basis of Q^" + std::to_string(n) + ":\n";
    for (std::size_t i = 0; i < full.basis.size(); ++i) {
        o.plain += "  " + render_tuple(full.basis[i]) + (i >= vs.size() ? "  (added)" : "") + "\n";
    }
    o.data["basis"] = jvectors(full.basis);
    o.data["added"] = full.basis.size() - vs.size();
    return o;
}

Output do_subspace(const Command& c) {
    require_inputs(c, 1, 1);
    Output o;
    SubspaceVerdict v;
    try {
        v = subspace_from_forms(parse_forms(c.inputs[0]));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NonLinearCoordinate) throw;
        o.plain = std::string("not a subspace: ") + e.what() + "\n";
        o.data["subspace"] = false;
        o.data["reason"] = e.what();
        return o;
    }
    o.data["subspace"] = v.is_subspace;
    if (!v.is_subspace) {
        o.plain = "not a subspace: " + v.reason + "\n";
        o.data["reason"] = v.reason;
        return o;
    }
    o.plain = "subspace of Q^" + std::to_string(v.space.ambient) + ", dim = " + std::to_string(v.space.dimension()) +
              "\nbasis:\n" + plain_vectors(v.space.basis);
    o.data["dimension"] = v.space.dimension();
    o.data["basis"] = jvectors(v.space.basis);
    return o;
}

Output do_fundamentals(const Command& c) {
    require_inputs(c, 1, 1);
    const auto f = fundamental_subspaces(matrix_input(c, 0));
    Output o;
    o.plain = "rank = " + std::to_string(f.rank) + "\nnullity = " + std::to_string(f.nullity) + "\nnull space basis:\n" +
              plain_vectors(f.null.basis) + "row space basis:\n" + plain_vectors(f.row.basis) +
              "column space basis:\n" + plain_vectors(f.column.basis);
    o.data["rank"] = f.rank;
    o.data["nullity"] = f.nullity;
    o.data["null"] = jvectors(f.null.basis);
    o.data["row"] = jvectors(f.row.basis);
    o.data["column"] = jvectors(f.column.basis);
    return o;
}

template <typename Body>
Output with_map(const Command& c, Body body) {
    Output o;
    try {
        return body(map_input(c.inputs.at(0)));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NonLinearCoordinate) throw;
        o.plain = std::string("not linear: ") + e.what() + "\n";
        o.data["linear"] = false;
        o.data["reason"] = e.what();
        return o;
    }
}

Output do_transform(const Command& c) {
    require_inputs(c, 1, 2);
    return with_map(c, [&](const LinearMap& t) {
        Output o;
        o.plain = "standard matrix (" + t.domain_label + " -> " + t.codomain_label + "):\n" +
                  render_block(t.matrix, std::nullopt, "  ");
        o.data["linear"] = true;
        o.data["matrix"] = jmatrix(t.matrix);
        if (c.inputs.size() == 2) {
            const Matrix v = parse_vector(c.inputs[1]);
            const Matrix image = apply(t, v);
            o.plain += "T" + render_tuple(v) + " = " + render_tuple(image) + "\n";
            o.data["input"] = jvector(v);
            o.data["image"] = jvector(image);
        }
        return o;
    });
}

Output do_kernel_or_range(const Command& c, bool want_kernel) {
    require_inputs(c, 1, 1);
    return with_map(c, [&](const LinearMap& t) {
        const Subspace s = want_kernel ? kernel(t) : range(t);
        Output o;
        o.plain = std::string(want_kernel ? "kernel" : "range") + ", dim = " + std::to_string(s.dimension()) +
                  "\nbasis:\n" + plain_vectors(s.basis);
        o.data["linear"] = true;
        o.data["dimension"] = s.dimension();
        o.data["basis"] = jvectors(s.basis);
        return o;
    });
}

json jmultiplicities(const Diagonalization& d) {
    json out = json::array();
    for (std::size_t k = 0; k < d.multiplicities.size(); ++k) {
        const auto& m = d.multiplicities[k];
        out.push_back({{"value", jscalar(m.value)},
                       {"algebraic", m.algebraic},
                       {"geometric", m.geometric},
                       {"eigenspace", jvectors(d.eigenspaces[k].basis)}});
    }
    return out;
}

Output do_eigen(const Command& c) {
    require_inputs(c, 1, 1);
    const auto d = diagonalize(matrix_input(c, 0));
    Output o;
    o.plain = "characteristic polynomial: " + render_factored(d.roots) + "\n";
    o.plain += "expanded: " + d.char_poly.to_string("t") + "\n";
    for (std::size_t k = 0; k < d.multiplicities.size(); ++k) {
        const auto& m = d.multiplicities[k];
        o.plain += "eigenvalue " + m.value.to_string() + ": algebraic " + std::to_string(m.algebraic) +
                   ", geometric " + std::to_string(m.geometric) + "\n" + plain_vectors(d.eigenspaces[k].basis);
    }
    o.data["char_poly"] = jvector(d.char_poly.coefficients());
    o.data["factored"] = render_factored(d.roots);
    o.data["eigenvalues"] = jmultiplicities(d);
    if (!d.roots.splits()) {
        o.plain += "no rational roots: " + d.roots.residual.to_string("t") + "\n";
        o.data["residual"] = jvector(d.roots.residual.coefficients());
    }
    return o;
}

Output do_diagonalize(const Command& c) {
    require_inputs(c, 1, 1);
    const Matrix a = matrix_input(c, 0);
    const auto d = diagonalize(a);
    Output o;
    o.data["eigenvalues"] = jmultiplicities(d);
    switch (d.kind) {
        case Diagonalization::Kind::NotSplit:
            o.plain = "not diagonalizable over Q: " + d.roots.residual.to_string("t") + " has no rational roots\n";
            o.data["diagonalizable"] = false;
            o.data["residual"] = jvector(d.roots.residual.coefficients());
            break;
        case Diagonalization::Kind::NotDiagonalizable: {
            const auto& bad = *std::find_if(d.multiplicities.begin(), d.multiplicities.end(),
                                            [&](const Multiplicity& m) { return m.value == *d.deficient; });
            o.plain = "not diagonalizable: eigenvalue " + d.deficient->to_string() + " has algebraic multiplicity " +
                      std::to_string(bad.algebraic) + " but eigenspace dimension " + std::to_string(bad.geometric) +
                      "\n";
            o.data["diagonalizable"] = false;
            o.data["deficient"] = jscalar(*d.deficient);
            break;
        }
        case Diagonalization::Kind::Diagonalizable: {
            const Matrix check = multiply(multiply(*d.l, *d.d), inverse_gauss_jordan(*d.l));
            o.plain = "L:\n" + render_block(*d.l, std::nullopt, "  ") + "D:\n" + render_block(*d.d, std::nullopt, "  ") +
                      "L*D*L^-1:\n" + render_block(check, std::nullopt, "  ");
            o.data["diagonalizable"] = true;
            o.data["L"] = jmatrix(*d.l);
            o.data["D"] = jmatrix(*d.d);
            o.data["check"] = jmatrix(check);
            break;
        }
    }
    return o;
}

Output do_power(const Command& c) {
    require_inputs(c, 1, 1);
    if (!c.power) usage("power needs --power k");
    long k = 0;
    std::size_t pos = 0;
    try {
        k = std::stol(*c.power, &pos);
    } catch (const std::exception&) {
        usage("bad --power '" + *c.power + "'");
    }
    if (pos != c.power->size()) usage("bad --power '" + *c.power + "'");
    const Matrix p = matrix_power(matrix_input(c, 0), k);
    Output o = matrix_result(p, "power");
    o.data["k"] = k;
    return o;
}

Output do_dot(const Command& c) {
    require_inputs(c, 1, 2);
    std::vector<Matrix> vs;
    if (c.inputs.size() == 2) {
        vs = {parse_vector(c.inputs[0]), parse_vector(c.inputs[1])};
    } else {
        vs = parse_vector_list(c.inputs[0]);
    }
    if (vs.size() != 2) usage("dot expects exactly two vectors");
    const Rational d = dot(vs[0], vs[1]);
    Output o;
    o.plain = d.to_string() + "\n";
    o.data["dot"] = jscalar(d);
    return o;
}

Output do_gram_schmidt(const Command& c) {
    require_inputs(c, 1, 1);
    const auto gs = gram_schmidt(parse_vector_list(c.inputs[0]));
    Output o;
    o.plain = "basis:\n" + plain_vectors(gs.input_basis);
    json ws = json::array();
    for (std::size_t i = 0; i < gs.vectors.size(); ++i) {
        const std::string name = "W" + std::to_string(i + 1);
        o.plain += name + " = " + render_tuple(gs.vectors[i]) + "  |" + name + "|^2 = " + gs.squared_norms[i].to_string();
        if (!gs.projections[i].empty()) {
            o.plain += "  projections:";
            for (std::size_t j = 0; j < gs.projections[i].size(); ++j) {
                o.plain += (j ? ", " : " ") + gs.projections[i][j].to_string() + "*W" + std::to_string(j + 1);
            }
        }
        o.plain += "\n";
        ws.push_back({{"vector", jvector(gs.vectors[i])},
                      {"squared_norm", jscalar(gs.squared_norms[i])},
                      {"projections", jvector(gs.projections[i])}});
    }
    o.data["basis"] = jvectors(gs.input_basis);
    o.data["orthogonal"] = ws;
    return o;
}

Output do_decompose_sym(const Command& c) {
    require_inputs(c, 1, 1);
    const Matrix a = matrix_input(c, 0);
    const auto d = sym_skew_decompose(a);
    Output o;
    o.plain = "class: " + std::string(to_string(classify_symmetry(a))) + "\nsymmetric part (A + A^T):\n" +
              render_block(d.symmetric, std::nullopt, "  ") + "skew part (A - A^T):\n" +
              render_block(d.skew, std::nullopt, "  ") + "A = 1/2 * symmetric + 1/2 * skew\n";
    o.data["class"] = std::string(to_string(classify_symmetry(a)));
    o.data["symmetric"] = jmatrix(d.symmetric);
    o.data["skew"] = jmatrix(d.skew);
    return o;
}

Output do_mul(const Command& c) {
    if (c.inputs.size() < 2) usage("mul expects at least two matrices");
    Matrix acc = matrix_input(c, 0);
    for (std::size_t i = 1; i < c.inputs.size(); ++i) acc = multiply(acc, matrix_input(c, i));
    return matrix_result(acc, "product");
}

struct VerbSpec {
    std::function<Output(const Command&)> handler;
    std::set<std::string> flags;
};

const std::map<std::string, VerbSpec>& verb_table() {
    static const std::map<std::string, VerbSpec> table = {
        {"solve", {do_solve, {"trace"}}},
        {"rref", {[](const Command& c) { return reduce_with(c, Form::ReducedEchelon); }, {"trace"}}},
        {"reduce",
         {[](const Command& c) { return reduce_with(c, parse_form(c.form.value_or("reduced"))); }, {"trace", "form"}}},
        {"inverse", {do_inverse, {"trace", "method"}}},
        {"det", {do_det, {"trace", "method"}}},
        {"cofactor",
         {[](const Command& c) {
              require_inputs(c, 1, 1);
              return matrix_result(cofactor_matrix(matrix_input(c, 0)), "cofactors");
          },
          {}}},
        {"cramer", {do_cramer, {}}},
        {"adjoint",
         {[](const Command& c) {
              require_inputs(c, 1, 1);
              return matrix_result(adjoint(matrix_input(c, 0)), "adjoint");
          },
          {}}},
        {"inv-entry", {do_inv_entry, {"entry"}}},
        {"basis", {do_basis, {}}},
        {"span-member", {do_span_member, {}}},
        {"extend-basis", {do_extend_basis, {}}},
        {"subspace", {do_subspace, {}}},
        {"fundamentals", {do_fundamentals, {}}},
        {"transform", {do_transform, {}}},
        {"kernel", {[](const Command& c) { return do_kernel_or_range(c, true); }, {}}},
        {"range", {[](const Command& c) { return do_kernel_or_range(c, false); }, {}}},
        {"eigen", {do_eigen, {}}},
        {"diagonalize", {do_diagonalize, {}}},
        {"power", {do_power, {"power"}}},
        {"dot", {do_dot, {}}},
        {"gram-schmidt", {do_gram_schmidt, {}}},
        {"decompose-sym", {do_decompose_sym, {}}},
        {"transpose",
         {[](const Command& c) {
              require_inputs(c, 1, 1);
              return matrix_result(transpose(matrix_input(c, 0)), "transpose");
          },
          {}}},
        {"mul", {do_mul, {}}},
    };
    return table;
}

void check_flags(const Command& c, const std::set<std::string>& allowed) {
    auto check = [&](bool present, const char* name) {
        if (present && !allowed.contains(name)) usage("--" + std::string(name) + " does not apply to " + c.verb);
    };
    check(c.trace, "trace");
    check(c.form.has_value(), "form");
    check(c.method.has_value(), "method");
    check(c.entry.has_value(), "entry");
    check(c.power.has_value(), "power");
    if (c.format != "plain" && c.format != "json") usage("--format must be plain or json");
}

}  // namespace

const std::vector<std::string>& known_verbs() {
    static const std::vector<std::string> verbs = [] {
        std::vector<std::string> v;
        for (const auto& [name, entry] : verb_table()) v.push_back(name);
        return v;
    }();
    return verbs;
}

Report run(const Command& command) {
    Report report;
    try {
        const auto& table = verb_table();
        const auto it = table.find(command.verb);
        if (it == table.end()) usage("unknown verb '" + command.verb + "'");
        check_flags(command, it->second.flags);
        Output o = it->second.handler(command);
        if (command.format == "json") {
            json doc = {{"verb", command.verb}, {"status", "ok"}};
            doc.update(o.data);
            report.output = doc.dump(2) + "\n";
        } else {
            report.output = std::move(o.plain);
        }
    } catch (const Error& e) {
        report.exit_code = is_input_error(e.code()) ? 2 : 1;
        report.error = std::string(to_string(e.code())) + ": " + e.what() + "\n";
        if (command.format == "json") {
            json doc = {{"verb", command.verb},
                        {"status", "error"},
                        {"error", std::string(to_string(e.code()))},
                        {"message", e.what()}};
            report.output = doc.dump(2) + "\n";
        }
    } catch (const std::exception& e) {
        report.exit_code = 1;
        report.error = std::string("internal error: ") + e.what() + "\n";
    }
    return report;
}

}  // namespace exactla
