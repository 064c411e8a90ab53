#include "ihz/semantics.hpp"

namespace ihz {

namespace {

// Matrix of the map underlying a generator. A co-generator carries the
// matrix of its mirror image: coadd shares (1 1) with add, codup shares
// the column (1/1) with dup.
MatZ gen_matrix(GenKind k, const Int& scalar) {
    switch (k) {
    case GenKind::Add:
    case GenKind::Coadd:
        return MatZ{{Int(1), Int(1)}};
    case GenKind::Dup:
    case GenKind::Codup:
        return MatZ{{Int(1)}, {Int(1)}};
    case GenKind::Zero:
    case GenKind::Cozero:
        return MatZ(1, 0);
    case GenKind::Del:
    case GenKind::Codel:
        return MatZ(0, 1);
    case GenKind::Amp:
    case GenKind::Coamp:
        return MatZ{{scalar}};
    }
    throw Error("unknown generator");
}

bool is_co_generator(GenKind k) {
    switch (k) {
    case GenKind::Coadd:
    case GenKind::Cozero:
    case GenKind::Codup:
    case GenKind::Codel:
    case GenKind::Coamp:
        return true;
    default:
        return false;
    }
}

MatZ sym_matrix() {
    return MatZ{{Int(0), Int(1)}, {Int(1), Int(0)}};
}

} // namespace

LinRel sem_rel(const Circuit& c) {
    typecheck(c);
    switch (c->op) {
    case CircuitNode::Op::Gen: {
        LinRel g = graph_rel(gen_matrix(c->kind, c->scalar));
        return is_co_generator(c->kind) ? converse(g) : g;
    }
    case CircuitNode::Op::Id:
        return rel_id(c->width);
    case CircuitNode::Op::Sym:
        return rel_sym(1, 1);
    case CircuitNode::Op::Seq:
        return rel_compose(sem_rel(c->a), sem_rel(c->b));
    case CircuitNode::Op::Tensor:
        return rel_tensor(sem_rel(c->a), sem_rel(c->b));
    }
    throw Error("unknown circuit node");
}

SpanZ sem_span(const Circuit& c) {
    typecheck(c);
    switch (c->op) {
    case CircuitNode::Op::Gen: {
        MatZ a = gen_matrix(c->kind, c->scalar);
        return is_co_generator(c->kind) ? span_of_opmap(a) : span_of_map(a);
    }
    case CircuitNode::Op::Id:
        return span_identity(c->width);
    case CircuitNode::Op::Sym:
        return span_of_map(sym_matrix());
    case CircuitNode::Op::Seq:
        return span_compose(sem_span(c->a), sem_span(c->b));
    case CircuitNode::Op::Tensor:
        return span_tensor(sem_span(c->a), sem_span(c->b));
    }
    throw Error("unknown circuit node");
}

CospanZ sem_cospan(const Circuit& c) {
    typecheck(c);
    switch (c->op) {
    case CircuitNode::Op::Gen: {
        MatZ a = gen_matrix(c->kind, c->scalar);
        return is_co_generator(c->kind) ? cospan_of_opmap(a) : cospan_of_map(a);
    }
    case CircuitNode::Op::Id:
        return cospan_identity(c->width);
    case CircuitNode::Op::Sym:
        return cospan_of_map(sym_matrix());
    case CircuitNode::Op::Seq:
        return cospan_compose(sem_cospan(c->a), sem_cospan(c->b));
    case CircuitNode::Op::Tensor:
        return cospan_tensor(sem_cospan(c->a), sem_cospan(c->b));
    }
    throw Error("unknown circuit node");
}

CospanZ tra_span_to_cospan(const SpanZ& s) {
    return CospanZ(s.left.transpose(), s.right.transpose());
}

bool equal_ih(const Circuit& c1, const Circuit& c2) {
    Interface i1 = typecheck(c1);
    Interface i2 = typecheck(c2);
    if (!(i1 == i2))
        return false;
    return sem_rel(c1) == sem_rel(c2);
}

Circuit normal_form(const Circuit& c) {
    SpanZ s = rel_to_span(sem_rel(c));
    return seq(mirror(matrix_to_circuit(s.left)), matrix_to_circuit(s.right));
}

Circuit cospan_form(const Circuit& c) {
    CospanZ co = rel_to_cospan(sem_rel(c));
    return seq(matrix_to_circuit(co.left), mirror(matrix_to_circuit(co.right)));
}

Circuit frac_circuit(const Int& p, const Int& q) {
    return seq(coamp(q), amp(p));
}

MatZ circuit_to_matrix(const Circuit& c) {
    LinRel r = sem_rel(c);
    // The relation is the graph of a matrix iff the canonical basis has
    // its pivots exactly on the left boundary coordinates.
    if (r.space.dim() != r.n)
        throw DomainError("relation is not a matrix graph: dimension " +
                          std::to_string(r.space.dim()) + ", left boundary " +
                          std::to_string(r.n));
    const MatQ& basis = r.space.basis();
    for (size_t i = 0; i < r.n; ++i)
        for (size_t j = 0; j < r.n; ++j)
            if (basis.at(i, j) != (i == j ? Rat(1) : Rat(0)))
                throw DomainError("relation is not total and single-valued");
    MatZ a(r.m, r.n);
    for (size_t i = 0; i < r.n; ++i)
        for (size_t j = 0; j < r.m; ++j) {
            const Rat& x = basis.at(i, r.n + j);
            if (denom(x) != 1)
                throw DomainError("matrix graph has non-integer entry " + to_string(x));
            a.at(j, i) = numer(x);
        }
    return a;
}

} // namespace ihz
