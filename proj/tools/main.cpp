#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ihz/circuit.hpp"
#include "ihz/intmat.hpp"
#include "ihz/linrel.hpp"
#include "ihz/semantics.hpp"
#include "ihz/theory.hpp"

namespace {

using namespace ihz;

constexpr int kExitOk = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitParse = 2;
constexpr int kExitType = 3;
constexpr int kExitDomain = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MatZ load_matrix(const std::string& path) { return parse_matz(slurp(path)); }

// Circuits come either inline (quoted DSL text) or as a file path.
Circuit load_circuit(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec))
        return parse_circuit(slurp(arg));
    return parse_circuit(arg);
}

std::string json_of(const MatZ& a) {
    std::ostringstream out;
    out << "{\"rows\":" << a.rows() << ",\"cols\":" << a.cols() << ",\"entries\":[";
    for (size_t k = 0; k < a.rows() * a.cols(); ++k) {
        if (k)
            out << ",";
        out << "[\"" << to_string(a.entries()[k]) << "\",\"1\"]";
    }
    out << "]}";
    return out.str();
}

std::string json_of(const LinRel& r) {
    std::ostringstream out;
    out << "{\"n\":" << r.n << ",\"m\":" << r.m << ",\"basis\":[";
    for (size_t i = 0; i < r.space.dim(); ++i) {
        if (i)
            out << ",";
        out << "[";
        for (size_t j = 0; j < r.space.ambient(); ++j) {
            if (j)
                out << ",";
            out << "\"" << to_string(r.space.basis().at(i, j)) << "\"";
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

void print_labeled(const std::string& label, const MatZ& a) {
    std::cout << "# " << label << "\n" << to_string(a);
}

int cmd_hnf(const std::string& path, bool json) {
    HnfResult r = hnf(load_matrix(path));
    if (json) {
        std::cout << "{\"h\":" << json_of(r.h) << ",\"u\":" << json_of(r.u)
                  << ",\"r\":" << r.r << ",\"pivot_rows\":[";
        for (size_t i = 0; i < r.pivot_rows.size(); ++i)
            std::cout << (i ? "," : "") << r.pivot_rows[i] + 1;
        std::cout << "]}\n";
        return kExitOk;
    }
    print_labeled("h", r.h);
    print_labeled("u", r.u);
    std::cout << "# r " << r.r << "\n# f";
    for (size_t row : r.pivot_rows)
        std::cout << " " << row + 1;
    std::cout << "\n";
    return kExitOk;
}

int cmd_kernel(const std::string& path, bool json) {
    MatZ k = kernel_basis(load_matrix(path));
    if (json)
        std::cout << json_of(k) << "\n";
    else
        std::cout << to_string(k);
    return kExitOk;
}

int cmd_pb_po(const std::string& pa, const std::string& pb, bool po, bool json) {
    MatZ a = load_matrix(pa), b = load_matrix(pb);
    auto [p, q] = po ? pushout(a, b) : pullback(a, b);
    if (json) {
        std::cout << "{\"p\":" << json_of(p) << ",\"q\":" << json_of(q) << "}\n";
    } else {
        print_labeled("p", p);
        print_labeled("q", q);
    }
    return kExitOk;
}

int cmd_sem(const std::string& arg, const std::string& as, bool json) {
    Circuit c = load_circuit(arg);
    if (as == "rel") {
        LinRel r = sem_rel(c);
        if (json)
            std::cout << json_of(r) << "\n";
        else
            std::cout << to_string(r);
    } else if (as == "span") {
        SpanZ s = sem_span(c);
        if (json)
            std::cout << "{\"left\":" << json_of(s.left) << ",\"right\":" << json_of(s.right)
                      << "}\n";
        else {
            print_labeled("left", s.left);
            print_labeled("right", s.right);
        }
    } else if (as == "cospan") {
        CospanZ s = sem_cospan(c);
        if (json)
            std::cout << "{\"left\":" << json_of(s.left) << ",\"right\":" << json_of(s.right)
                      << "}\n";
        else {
            print_labeled("left", s.left);
            print_labeled("right", s.right);
        }
    } else {
        throw ParseError("--as must be rel, span or cospan");
    }
    return kExitOk;
}

int cmd_eq(const std::string& a1, const std::string& a2) {
    Circuit c1 = load_circuit(a1), c2 = load_circuit(a2);
    Interface i1 = typecheck(c1), i2 = typecheck(c2);
    if (!(i1 == i2)) {
        std::cout << "unequal: interfaces " << i1.str() << " vs " << i2.str() << "\n";
        return kExitUnequal;
    }
    LinRel r1 = sem_rel(c1), r2 = sem_rel(c2);
    if (r1 == r2) {
        std::cout << "equal\n";
        return kExitOk;
    }
    std::cout << "unequal\n# first\n" << to_string(r1) << "# second\n" << to_string(r2);
    return kExitUnequal;
}

int cmd_normalize(const std::string& arg, bool cospan) {
    Circuit c = load_circuit(arg);
    std::cout << print_circuit(cospan ? cospan_form(c) : normal_form(c)) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& arg) {
    LinRel r = sem_rel(load_circuit(arg));
    std::cout << to_string(classify_1_1(r)) << "\n";
    return kExitOk;
}

int cmd_frac(const std::string& op, const std::string& f1, const std::string& f2) {
    Rat a = parse_rat(f1), b = parse_rat(f2);
    Circuit ca = frac_circuit(numer(a), denom(a));
    Circuit cb = frac_circuit(numer(b), denom(b));
    Circuit combined;
    if (op == "mul")
        combined = seq(ca, cb);
    else if (op == "add")
        combined = seq(gen(GenKind::Dup), seq(tensor(ca, cb), gen(GenKind::Add)));
    else
        throw ParseError("frac expects 'mul' or 'add'");
    Classification cls = classify_1_1(sem_rel(combined));
    switch (cls.tag) {
    case RelClass::XAxis:
        std::cout << "0\n";
        return kExitOk;
    case RelClass::Line:
        std::cout << to_string(make_rat(cls.k2, cls.k1)) << "\n";
        return kExitOk;
    default:
        throw DomainError("result is not a rational: " + to_string(cls));
    }
}

int cmd_axioms(bool json, unsigned seed) {
    CheckReport rep = check_all(seed);
    std::cout << (json ? report_json(rep) : report_text(rep));
    return rep.all_ok() ? kExitOk : kExitUnequal;
}

int cmd_fmt(const std::string& arg) {
    std::cout << print_circuit(load_circuit(arg)) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact linear algebra over Z/Q and a circuit calculus for linear relations"};
    app.require_subcommand(1);

    std::string mat1, mat2, circ1, circ2, as = "rel", frac_op;
    bool json = false, cospan = false;
    unsigned seed = 20140703;

    auto* hnf_cmd = app.add_subcommand("hnf", "Canonical column Hermite form H = A*U");
    hnf_cmd->add_option("matrix", mat1, "matrix file")->required();
    hnf_cmd->add_flag("--json", json);

    auto* ker_cmd = app.add_subcommand("kernel", "Integer kernel basis");
    ker_cmd->add_option("matrix", mat1, "matrix file")->required();
    ker_cmd->add_flag("--json", json);

    auto* pb_cmd = app.add_subcommand("pullback", "Pullback legs of two maps into a common target");
    pb_cmd->add_option("matrixA", mat1)->required();
    pb_cmd->add_option("matrixB", mat2)->required();
    pb_cmd->add_flag("--json", json);

    auto* po_cmd = app.add_subcommand("pushout", "Pushout legs of two maps out of a common source");
    po_cmd->add_option("matrixA", mat1)->required();
    po_cmd->add_option("matrixB", mat2)->required();
    po_cmd->add_flag("--json", json);

    auto* sem_cmd = app.add_subcommand("sem", "Denotation of a circuit");
    sem_cmd->add_option("circuit", circ1, "circuit text or file")->required();
    sem_cmd->add_option("--as", as, "rel|span|cospan")->capture_default_str();
    sem_cmd->add_flag("--json", json);

    auto* eq_cmd = app.add_subcommand("eq", "Decide equality of two circuits");
    eq_cmd->add_option("circuit1", circ1)->required();
    eq_cmd->add_option("circuit2", circ2)->required();

    auto* norm_cmd = app.add_subcommand("normalize", "Canonical span-form circuit");
    norm_cmd->add_option("circuit", circ1)->required();
    norm_cmd->add_flag("--cospan", cospan, "cospan-form instead");

    auto* cls_cmd = app.add_subcommand("classify", "Shape of a 1->1 denotation");
    cls_cmd->add_option("circuit", circ1)->required();

    auto* frac_cmd = app.add_subcommand("frac", "Rational arithmetic through circuits");
    frac_cmd->add_option("op", frac_op, "mul|add")->required();
    frac_cmd->add_option("x", circ1, "p/q")->required();
    frac_cmd->add_option("y", circ2, "r/s")->required();

    auto* ax_cmd = app.add_subcommand("axioms", "Validate the equational theory");
    ax_cmd->add_flag("--json", json);
    ax_cmd->add_option("--seed", seed, "seed for the random scalar draws");

    auto* fmt_cmd = app.add_subcommand("fmt", "Parse and pretty-print a circuit");
    fmt_cmd->add_option("circuit", circ1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    try {
        if (hnf_cmd->parsed())
            return cmd_hnf(mat1, json);
        if (ker_cmd->parsed())
            return cmd_kernel(mat1, json);
        if (pb_cmd->parsed())
            return cmd_pb_po(mat1, mat2, false, json);
        if (po_cmd->parsed())
            return cmd_pb_po(mat1, mat2, true, json);
        if (sem_cmd->parsed())
            return cmd_sem(circ1, as, json);
        if (eq_cmd->parsed())
            return cmd_eq(circ1, circ2);
        if (norm_cmd->parsed())
            return cmd_normalize(circ1, cospan);
        if (cls_cmd->parsed())
            return cmd_classify(circ1);
        if (frac_cmd->parsed())
            return cmd_frac(frac_op, circ1, circ2);
        if (ax_cmd->parsed())
            return cmd_axioms(json, seed);
        if (fmt_cmd->parsed())
            return cmd_fmt(circ1);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return kExitType;
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitParse;
}
