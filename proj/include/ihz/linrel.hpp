#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihz/intmat.hpp"
#include "ihz/mat.hpp"

namespace ihz {

// Reduced row echelon form and rank.
std::pair<MatQ, size_t> rref(const MatQ& a);

// Some exact solution of a*x = b over the rationals, or nullopt.
std::optional<std::vector<Rat>> solve_q(const MatQ& a, const std::vector<Rat>& b);

// Exact inverse, or nullopt when singular. Throws DomainError on
// non-square input.
std::optional<MatQ> inverse_q(const MatQ& a);

// A rational subspace in canonical form: the basis rows are the RREF of
// any generating set, zero rows dropped. Two Subspace values denote the
// same subspace iff they are structurally equal.
class Subspace {
public:
    // Zero subspace of the given ambient dimension.
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    // Canonicalizes the row space of gens (rows of length ambient).
    static Subspace from_generators(const MatQ& gens);
    static Subspace from_generators(const std::vector<std::vector<Rat>>& gens, size_t ambient);
    static Subspace full(size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const MatQ& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    size_t ambient_;
    MatQ basis_; // dim x ambient, canonical RREF, no zero rows
};

// Canonical kernel { x : a*x = 0 } over the rationals.
Subspace kernel_q(const MatQ& a);

// A linear relation n -> m: a subspace of Q^n x Q^m, left boundary
// coordinates first.
struct LinRel {
    size_t n, m;
    Subspace space;

    LinRel(size_t n_, size_t m_, Subspace s) : n(n_), m(m_), space(std::move(s)) {
        if (space.ambient() != n + m)
            throw DimensionError("relation space has ambient " +
                                 std::to_string(space.ambient()) + ", boundaries want " +
                                 std::to_string(n + m));
    }

    bool operator==(const LinRel& o) const {
        return n == o.n && m == o.m && space == o.space;
    }
    bool operator!=(const LinRel& o) const { return !(*this == o); }
};

// The joint-image subspace of a span: all (Az, Bz).
LinRel phi(const SpanZ& s);

// The equalizer subspace of a cospan: all (x, y) with Ax = By.
LinRel psi(const CospanZ& c);

// Relational composition: eliminate the middle coordinates through an
// exact kernel computation on the generator matrices.
LinRel rel_compose(const LinRel& v, const LinRel& w);

LinRel rel_id(size_t n);
LinRel rel_sym(size_t n, size_t m);
LinRel rel_tensor(const LinRel& v, const LinRel& w);
LinRel converse(const LinRel& v);

// Graph { (x, Ax) } of a matrix.
LinRel graph_rel(const MatQ& a);
LinRel graph_rel(const MatZ& a);

// Full relation Q^n x Q^m.
LinRel rel_full(size_t n, size_t m);

// Canonical span presenting a relation: clear denominators of the RREF
// basis rows and use the primitive integer vectors as the columns of the
// stacked legs; middle = dim of the space. phi(rel_to_span(r)) = r.
SpanZ rel_to_span(const LinRel& r);

// Pushout (over Z) of rel_to_span(r); psi(rel_to_cospan(r)) = r.
CospanZ rel_to_cospan(const LinRel& r);

// The five shapes of a subspace of Q x Q.
enum class RelClass { Full, Zero, XAxis, YAxis, Line };

struct Classification {
    RelClass tag;
    Int k1, k2; // for Line: coprime, k1 > 0, both nonzero
    bool operator==(const Classification& o) const {
        return tag == o.tag && k1 == o.k1 && k2 == o.k2;
    }
};

// Classifies a 1 -> 1 relation. Throws DomainError otherwise.
Classification classify_1_1(const LinRel& r);

std::string to_string(const Classification& c);

// Rendering: "dim D, rank R" then the basis rows. For relations a
// "rel N M" line comes first.
std::string to_string(const Subspace& s);
std::string to_string(const LinRel& r);
LinRel parse_linrel(const std::string& text);

} // namespace ihz
