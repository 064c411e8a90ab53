#include <doctest.h>

#include <functional>

#include "ihz/circuit.hpp"
#include "ihz/semantics.hpp"
#include "support.hpp"

using namespace ihz;
using namespace testsupport;

TEST_CASE("typecheck") {
    Circuit c = seq(gen(GenKind::Dup), tensor(amp(2), amp(3)));
    Interface i = typecheck(c);
    CHECK(i.arity == 1);
    CHECK(i.coarity == 2);

    Interface j = typecheck(seq(gen(GenKind::Add), gen(GenKind::Dup)));
    CHECK(j.arity == 2);
    CHECK(j.coarity == 2);

    CHECK_THROWS_AS(typecheck(seq(gen(GenKind::Add), gen(GenKind::Add))), TypeError);
    CHECK(typecheck(id(0)) == Interface{0, 0});
}

TEST_CASE("parse examples") {
    Circuit c = parse_circuit("dup ; (amp(2) * amp(3))");
    CHECK(structural_equal(c, seq(gen(GenKind::Dup), tensor(amp(2), amp(3)))));

    CHECK(structural_equal(parse_circuit("id(0)"), id(0)));
    CHECK(typecheck(parse_circuit("id(0)")) == Interface{0, 0});
    CHECK(structural_equal(parse_circuit("amp(-12)"), amp(-12)));
    CHECK(structural_equal(parse_circuit("neg"), amp(-1)));
    CHECK(structural_equal(parse_circuit("# comment\nadd # more\n; dup"),
                           seq(gen(GenKind::Add), gen(GenKind::Dup))));

    // precedence: ";" binds looser than "*"
    CHECK(structural_equal(parse_circuit("dup ; amp(2) * amp(3)"),
                           seq(gen(GenKind::Dup), tensor(amp(2), amp(3)))));
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_circuit("dup ;"), ParseError);
    CHECK_THROWS_AS(parse_circuit("frob"), ParseError);
    CHECK_THROWS_AS(parse_circuit("(add"), ParseError);
    CHECK_THROWS_AS(parse_circuit("amp(2"), ParseError);
    CHECK_THROWS_AS(parse_circuit("add extra"), ParseError);
    try {
        parse_circuit("add ;\n  frob");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
}

TEST_CASE("print/parse round trip on random circuits") {
    Rng rng(41);
    for (int iter = 0; iter < 1000; ++iter) {
        size_t n = rand_int(rng, 0, 3), m = rand_int(rng, 0, 3);
        Circuit c = random_circuit(rng, n, m, rand_int(rng, 0, 8) % 5, 9);
        std::string text = print_circuit(c);
        CAPTURE(text);
        CHECK(structural_equal(parse_circuit(text), c));
    }
    // grouping that differs from the left-assoc default survives the trip
    Circuit right = seq(gen(GenKind::Dup), seq(tensor(amp(2), amp(3)), gen(GenKind::Add)));
    CHECK(structural_equal(parse_circuit(print_circuit(right)), right));
}

TEST_CASE("mirror") {
    CHECK(structural_equal(mirror(gen(GenKind::Add)), gen(GenKind::Coadd)));
    CHECK(structural_equal(mirror(gen(GenKind::Zero)), gen(GenKind::Cozero)));
    CHECK(structural_equal(mirror(amp(7)), coamp(7)));
    Circuit palindrome = seq(gen(GenKind::Dup), gen(GenKind::Codup));
    CHECK(structural_equal(mirror(palindrome), palindrome));

    Rng rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        Circuit c = random_circuit(rng, rand_int(rng, 0, 3), rand_int(rng, 0, 3), 4, 9);
        CHECK(structural_equal(mirror(mirror(c)), c));
        Interface i = typecheck(c), im = typecheck(mirror(c));
        CHECK(im.arity == i.coarity);
        CHECK(im.coarity == i.arity);
    }
}

TEST_CASE("photographic negative") {
    CHECK(structural_equal(pn(gen(GenKind::Add)), gen(GenKind::Codup)));
    CHECK(structural_equal(pn(gen(GenKind::Zero)), gen(GenKind::Codel)));
    CHECK(structural_equal(pn(gen(GenKind::Del)), gen(GenKind::Cozero)));
    CHECK(structural_equal(pn(amp(5)), coamp(5)));

    Rng rng(43);
    for (int iter = 0; iter < 200; ++iter) {
        Circuit c = random_circuit(rng, rand_int(rng, 0, 3), rand_int(rng, 0, 3), 4, 9);
        CHECK(structural_equal(pn(pn(c)), c));
        CHECK(typecheck(pn(c)) == typecheck(c)); // interfaces preserved
    }
}

TEST_CASE("matrix_to_circuit reference cases") {
    CHECK(structural_equal(matrix_to_circuit(MatZ{{7}}), amp(7)));
    CHECK(structural_equal(matrix_to_circuit(MatZ{{1}}), id(1)));
    CHECK(structural_equal(matrix_to_circuit(MatZ{{0}}),
                           seq(gen(GenKind::Del), gen(GenKind::Zero))));
    CHECK(structural_equal(matrix_to_circuit(MatZ{{1, 1}}), gen(GenKind::Add)));
    CHECK(structural_equal(matrix_to_circuit(MatZ{{1}, {1}}), gen(GenKind::Dup)));
}

TEST_CASE("matrix_to_circuit denotes the graph") {
    Rng rng(44);
    for (int iter = 0; iter < 300; ++iter) {
        MatZ a = random_matz(rng, rand_int(rng, 0, 5), rand_int(rng, 0, 5), 9);
        Circuit c = matrix_to_circuit(a);
        Interface i = typecheck(c);
        CHECK(i.arity == a.cols());
        CHECK(i.coarity == a.rows());
        CHECK(sem_rel(c) == graph_rel(a));
        CHECK(circuit_to_matrix(c) == a);
    }
    // the 4x3 reference shape with scalars 2 and 3
    MatZ m{{2, 0, 0}, {1, 0, 0}, {3, 1, 0}, {0, 0, 0}};
    CHECK(sem_rel(matrix_to_circuit(m)) == graph_rel(m));
}

TEST_CASE("circuit_to_matrix rejects non-graphs") {
    CHECK(circuit_to_matrix(gen(GenKind::Add)) == MatZ{{1, 1}});
    CHECK(circuit_to_matrix(seq(gen(GenKind::Dup), tensor(amp(2), amp(3)))) ==
          MatZ{{2}, {3}});
    CHECK_THROWS_AS(circuit_to_matrix(gen(GenKind::Coadd)), DomainError);
    CHECK_THROWS_AS(circuit_to_matrix(gen(GenKind::Codel)), DomainError);
    CHECK_THROWS_AS(circuit_to_matrix(seq(coamp(2), amp(3))), DomainError);
}

TEST_CASE("perm_circuit routes wires") {
    CHECK(structural_equal(perm_circuit({0, 1, 2}), id(3)));
    CHECK(structural_equal(perm_circuit({1, 0}), sym()));
    Rng rng(45);
    for (int iter = 0; iter < 50; ++iter) {
        size_t n = rand_int(rng, 0, 5);
        std::vector<size_t> perm(n);
        for (size_t i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Circuit c = perm_circuit(perm);
        MatZ p(n, n);
        for (size_t i = 0; i < n; ++i)
            p.at(perm[i], i) = 1;
        CHECK(sem_rel(c) == graph_rel(p));
    }
    CHECK_THROWS_AS(perm_circuit({0, 0}), DomainError);
}

TEST_CASE("desugar_scalars") {
    CHECK(structural_equal(desugar_scalars(amp(0)),
                           seq(gen(GenKind::Del), gen(GenKind::Zero))));
    CHECK(structural_equal(desugar_scalars(amp(1)), id(1)));
    CHECK(structural_equal(desugar_scalars(amp(-1)), amp(-1)));
    CHECK(sem_rel(desugar_scalars(amp(3))) == sem_rel(amp(3)));

    Rng rng(46);
    auto has_scalar = [](const Circuit& c) {
        // desugared circuits may only contain the antipode
        std::function<bool(const Circuit&)> walk = [&](const Circuit& x) -> bool {
            switch (x->op) {
            case CircuitNode::Op::Gen:
                return (x->kind == GenKind::Amp || x->kind == GenKind::Coamp) &&
                       x->scalar != -1;
            case CircuitNode::Op::Seq:
            case CircuitNode::Op::Tensor:
                return walk(x->a) || walk(x->b);
            default:
                return false;
            }
        };
        return walk(c);
    };
    for (int iter = 0; iter < 300; ++iter) {
        Circuit c = random_circuit(rng, rand_int(rng, 0, 3), rand_int(rng, 0, 3), 4, 9);
        Circuit d = desugar_scalars(c);
        CHECK_FALSE(has_scalar(d));
        CHECK(sem_rel(d) == sem_rel(c));
    }
}

TEST_CASE("antipode is involutive") {
    CHECK(sem_rel(seq(amp(-1), amp(-1))) == rel_id(1));
}
