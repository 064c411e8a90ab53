#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ihz/circuit.hpp"
#include "ihz/intmat.hpp"
#include "ihz/linrel.hpp"
#include "ihz/semantics.hpp"
#include "ihz/theory.hpp"

namespace py = pybind11;
using namespace ihz;

namespace {

// Arbitrary-precision values cross the boundary as decimal strings.
Int to_bigint(py::handle h) { return parse_int(py::str(h).cast<std::string>()); }

py::int_ from_bigint(const Int& v) { return py::int_(py::str(v.str())); }

MatZ to_mat(const py::sequence& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : py::sequence(rows[0]).size();
    MatZ m(r, c);
    for (size_t i = 0; i < r; ++i) {
        py::sequence row(rows[i]);
        if (row.size() != c)
            throw DimensionError("ragged matrix rows");
        for (size_t j = 0; j < c; ++j)
            m.at(i, j) = to_bigint(row[j]);
    }
    return m;
}

py::list from_mat(const MatZ& m) {
    py::list rows;
    for (size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (size_t j = 0; j < m.cols(); ++j)
            row.append(from_bigint(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict from_rel(const LinRel& r) {
    py::dict d;
    d["n"] = r.n;
    d["m"] = r.m;
    py::list basis;
    for (size_t i = 0; i < r.space.dim(); ++i) {
        py::list row;
        for (size_t j = 0; j < r.space.ambient(); ++j)
            row.append(to_string(r.space.basis().at(i, j)));
        basis.append(row);
    }
    d["basis"] = basis;
    return d;
}

std::string rational_of_class(const Classification& cls) {
    if (cls.tag == RelClass::XAxis)
        return "0";
    if (cls.tag != RelClass::Line)
        throw DomainError("result is not a rational: " + to_string(cls));
    return to_string(make_rat(cls.k2, cls.k1));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact integer/rational linear algebra and a string-diagram "
              "calculus for linear relations";

    py::register_exception<ParseError>(m, "CircuitParseError", PyExc_ValueError);
    py::register_exception<TypeError>(m, "CircuitTypeError", PyExc_TypeError);
    py::register_exception<DimensionError>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("hnf", [](const py::sequence& rows) {
        HnfResult r = hnf(to_mat(rows));
        py::dict d;
        d["h"] = from_mat(r.h);
        d["u"] = from_mat(r.u);
        d["r"] = r.r;
        py::list f;
        for (size_t row : r.pivot_rows)
            f.append(row + 1); // 1-based, matching the text output
        d["pivot_rows"] = f;
        return d;
    }, "Canonical column Hermite form: h = a*u with u unimodular");

    m.def("is_hnf", [](const py::sequence& rows) { return is_hnf(to_mat(rows)).has_value(); });

    m.def("is_canonical_hnf",
          [](const py::sequence& rows) { return is_canonical_hnf(to_mat(rows)); });

    m.def("kernel_basis",
          [](const py::sequence& rows) { return from_mat(kernel_basis(to_mat(rows))); },
          "Columns form a basis of the integer kernel");

    m.def("det", [](const py::sequence& rows) { return from_bigint(det(to_mat(rows))); });

    m.def("is_unimodular",
          [](const py::sequence& rows) { return is_unimodular(to_mat(rows)); });

    m.def("solve",
          [](const py::sequence& rows, const py::sequence& rhs) -> py::object {
              std::vector<Int> b;
              for (auto h : rhs)
                  b.push_back(to_bigint(h));
              auto x = solve_z(to_mat(rows), b);
              if (!x)
                  return py::none();
              py::list out;
              for (const Int& v : *x)
                  out.append(from_bigint(v));
              return out;
          },
          "Some integer solution of a*x = b, or None");

    m.def("pullback", [](const py::sequence& a, const py::sequence& b) {
        auto [p, q] = pullback(to_mat(a), to_mat(b));
        return py::make_tuple(from_mat(p), from_mat(q));
    });

    m.def("pushout", [](const py::sequence& a, const py::sequence& b) {
        auto [p, q] = pushout(to_mat(a), to_mat(b));
        return py::make_tuple(from_mat(p), from_mat(q));
    });

    m.def("validate", [](const std::string& text) {
        Interface i = typecheck(parse_circuit(text));
        return py::make_tuple(i.arity, i.coarity);
    }, "Parse and typecheck; returns (arity, coarity)");

    m.def("fmt",
          [](const std::string& text) { return print_circuit(parse_circuit(text)); });

    m.def("mirror_circuit",
          [](const std::string& text) { return print_circuit(mirror(parse_circuit(text))); });

    m.def("negative",
          [](const std::string& text) { return print_circuit(pn(parse_circuit(text))); },
          "Color-swap image of the circuit");

    m.def("desugar",
          [](const std::string& text) {
              return print_circuit(desugar_scalars(parse_circuit(text)));
          });

    m.def("circuit_of_matrix",
          [](const py::sequence& rows) { return print_circuit(matrix_to_circuit(to_mat(rows))); });

    m.def("matrix_of_circuit",
          [](const std::string& text) { return from_mat(circuit_to_matrix(parse_circuit(text))); });

    m.def("sem", [](const std::string& text) { return from_rel(sem_rel(parse_circuit(text))); },
          "Denoted relation: dict with n, m and the canonical basis rows");

    m.def("equal", [](const std::string& a, const std::string& b) {
        return equal_ih(parse_circuit(a), parse_circuit(b));
    });

    m.def("normalize",
          [](const std::string& text, bool cospan) {
              Circuit c = parse_circuit(text);
              return print_circuit(cospan ? cospan_form(c) : normal_form(c));
          },
          py::arg("circuit"), py::arg("cospan") = false);

    m.def("classify", [](const std::string& text) {
        return to_string(classify_1_1(sem_rel(parse_circuit(text))));
    });

    m.def("frac_mul", [](const std::string& a, const std::string& b) {
        Rat x = parse_rat(a), y = parse_rat(b);
        Circuit c = seq(frac_circuit(numer(x), denom(x)), frac_circuit(numer(y), denom(y)));
        return rational_of_class(classify_1_1(sem_rel(c)));
    });

    m.def("frac_add", [](const std::string& a, const std::string& b) {
        Rat x = parse_rat(a), y = parse_rat(b);
        Circuit c = seq(gen(GenKind::Dup),
                        seq(tensor(frac_circuit(numer(x), denom(x)),
                                   frac_circuit(numer(y), denom(y))),
                            gen(GenKind::Add)));
        return rational_of_class(classify_1_1(sem_rel(c)));
    });

    m.def("check_axioms", [](unsigned seed) {
        py::list out;
        for (const auto& o : check_all(seed).outcomes) {
            py::dict d;
            d["name"] = o.name;
            d["arity"] = o.interface.arity;
            d["coarity"] = o.interface.coarity;
            d["holds"] = o.holds;
            d["expected"] = o.expected;
            d["ok"] = o.ok();
            out.append(d);
        }
        return out;
    }, py::arg("seed") = 20140703u);
}
