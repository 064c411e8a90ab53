#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ihz/exactnum.hpp"
#include "ihz/mat.hpp"

namespace ihz {

// The twelve generators. amp/coamp carry an integer scalar payload.
enum class GenKind {
    Add,    // 2 -> 1
    Zero,   // 0 -> 1
    Dup,    // 1 -> 2
    Del,    // 1 -> 0
    Amp,    // 1 -> 1, scalar k
    Coadd,  // 1 -> 2
    Cozero, // 1 -> 0
    Codup,  // 2 -> 1
    Codel,  // 0 -> 1
    Coamp,  // 1 -> 1, scalar k
};

struct CircuitNode;
using Circuit = std::shared_ptr<const CircuitNode>;

struct CircuitNode {
    enum class Op { Gen, Id, Sym, Seq, Tensor };
    Op op;
    GenKind kind = GenKind::Add; // Gen only
    Int scalar = 0;              // Amp/Coamp only
    size_t width = 0;            // Id only
    Circuit a, b;                // Seq/Tensor children

    CircuitNode(Op o) : op(o) {}
};

Circuit gen(GenKind k);
Circuit amp(Int k);
Circuit coamp(Int k);
Circuit id(size_t n = 1);
Circuit sym();
Circuit seq(Circuit a, Circuit b);
Circuit tensor(Circuit a, Circuit b);

struct Interface {
    size_t arity = 0;
    size_t coarity = 0;
    bool operator==(const Interface& o) const {
        return arity == o.arity && coarity == o.coarity;
    }
    std::string str() const {
        return std::to_string(arity) + "->" + std::to_string(coarity);
    }
};

// Computes arity/coarity structurally; throws TypeError on a sequential
// composite whose interfaces disagree, naming the offending subterm.
Interface typecheck(const Circuit& c);

bool structural_equal(const Circuit& a, const Circuit& b);

// Concrete syntax, whitespace-insensitive with '#' line comments:
//   circuit := term { ";" term }
//   term    := factor { "*" factor }
//   factor  := atom | "(" circuit ")"
//   atom    := "id" [ "(" nat ")" ] | "sym" | generator names
//            | "amp" "(" int ")" | "coamp" "(" int ")" | "neg"
// ";" binds looser than "*"; both fold to the left.
Circuit parse_circuit(std::string_view text);
std::string print_circuit(const Circuit& c);

// Swaps each generator for its converse and reverses composition order.
Circuit mirror(const Circuit& c);

// Color swap: exchanges the white and black structures while keeping
// every interface; an involutive homomorphism.
Circuit pn(const Circuit& c);

// Rewrites every amp/coamp into {add, zero, dup, del, neg} and their
// converses, preserving semantics: amp(0) = del;zero, amp(1) = id,
// amp(k>=2) = fan-out to k wires then an add tree, amp(-k) = neg;amp(k).
Circuit desugar_scalars(const Circuit& c);

// The matrix-form circuit of an integer matrix a (arrow cols -> rows):
// fan-out layer, scalar layer, a routing network of adjacent swaps, and
// an add layer. Deterministic; its relational semantics is graph(a).
Circuit matrix_to_circuit(const MatZ& a);

// Inverse direction, through the semantics: returns a when the denoted
// relation is the graph of an integer matrix a, else throws DomainError.
// Defined in the semantics translation unit.
MatZ circuit_to_matrix(const Circuit& c);

// Network of adjacent transpositions realizing the permutation
// wire i -> position perm[i].
Circuit perm_circuit(const std::vector<size_t>& perm);

} // namespace ihz
