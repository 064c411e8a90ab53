#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ihz/mat.hpp"

namespace ihz {

// Structural profile of a matrix in Hermite normal form: r leading zero
// columns, then one pivot row per column, strictly increasing.
struct HnfProfile {
    size_t r = 0;
    std::vector<size_t> pivot_rows; // for columns r..cols-1, 0-based rows
};

struct HnfResult {
    MatZ h;                         // the canonical reduced HNF, h = a * u
    MatZ u;                         // unimodular, cols x cols
    size_t r = 0;                   // leading zero columns of h
    std::vector<size_t> pivot_rows; // pivot row per column r..cols-1
};

// Accepts any matrix satisfying the three HNF conditions: the first r
// columns are zero, each later column i has a nonzero entry at row f(i)
// with only zeros below it, and f is strictly increasing. Returns the
// (forced) profile, or nullopt.
std::optional<HnfProfile> is_hnf(const MatZ& a);

// The reduced form on top of is_hnf: pivots positive and, within each
// pivot row, entries in columns to the right of the pivot lie in
// [0, pivot).
bool is_canonical_hnf(const MatZ& a);

// Canonical reduced column-style Hermite normal form via unimodular
// column operations: h = a * u, |det u| = 1, is_canonical_hnf(h).
// hnf(a * v).h == hnf(a).h for any unimodular v.
HnfResult hnf(const MatZ& a);

// cols x r matrix whose columns are a Z-basis of { x : a*x = 0 } (the
// first r columns of hnf(a).u), each column sign-normalized so its first
// nonzero entry is positive.
MatZ kernel_basis(const MatZ& a);

// Exact determinant, Bareiss fraction-free elimination. Throws
// DomainError on non-square input. det of the 0x0 matrix is 1.
Int det(const MatZ& a);

// Square with |det| = 1.
bool is_unimodular(const MatZ& u);

// Some integer solution of a*x = b, or nullopt. Uses the HNF transform
// and back-substitution along the pivot structure.
std::optional<std::vector<Int>> solve_z(const MatZ& a, const std::vector<Int>& b);

// Pullback of f: n -> z, g: m -> z (matrices z x n and z x m): the legs
// (p, q) with f*p = g*q obtained by splitting kernel_basis(f | -g).
// p is n x r, q is m x r.
std::pair<MatZ, MatZ> pullback(const MatZ& f, const MatZ& g);

// Pushout of f: z -> n, g: z -> m (matrices n x z and m x z), computed as
// the transposed pullback of the transposes. p is r x n, q is r x m, with
// p*f = q*g.
std::pair<MatZ, MatZ> pushout(const MatZ& f, const MatZ& g);

// Span n <- z -> m: left is n x z, right is m x z.
struct SpanZ {
    MatZ left, right;
    SpanZ(MatZ l, MatZ r) : left(std::move(l)), right(std::move(r)) {
        if (left.cols() != right.cols())
            throw DimensionError("span legs disagree on middle: " + left.shape_str() +
                                 " vs " + right.shape_str());
    }
    size_t n() const { return left.rows(); }
    size_t m() const { return right.rows(); }
    size_t middle() const { return left.cols(); }
};

// Cospan n -> z <- m: left is z x n, right is z x m.
struct CospanZ {
    MatZ left, right;
    CospanZ(MatZ l, MatZ r) : left(std::move(l)), right(std::move(r)) {
        if (left.rows() != right.rows())
            throw DimensionError("cospan legs disagree on middle: " + left.shape_str() +
                                 " vs " + right.shape_str());
    }
    size_t n() const { return left.cols(); }
    size_t m() const { return right.cols(); }
    size_t middle() const { return left.rows(); }
};

SpanZ span_identity(size_t n);
CospanZ cospan_identity(size_t n);

// The four embeddings of matrices into spans/cospans. For a map given by
// the matrix a (target-rows x source-cols):
//   span_of_map(a)      = (id, a)   covariant leg
//   span_of_opmap(a)    = (a, id)   contravariant leg
//   cospan_of_map(a)    = (a, id)
//   cospan_of_opmap(a)  = (id, a)
SpanZ span_of_map(const MatZ& a);
SpanZ span_of_opmap(const MatZ& a);
CospanZ cospan_of_map(const MatZ& a);
CospanZ cospan_of_opmap(const MatZ& a);

// Equality of span arrows: equal boundaries, equal middles, and one
// unimodular change of middle coordinates carrying one onto the other,
// decided by comparing canonical HNFs of the stacked legs.
bool span_iso(const SpanZ& s1, const SpanZ& s2);
bool cospan_iso(const CospanZ& c1, const CospanZ& c2);

// Composition by pullback of the middle cospan / pushout of the middle
// span.
SpanZ span_compose(const SpanZ& s1, const SpanZ& s2);
CospanZ cospan_compose(const CospanZ& c1, const CospanZ& c2);

// The cospan obtained by pushing out a span, and dually.
CospanZ pushout_cospan(const SpanZ& s);
SpanZ pullback_span(const CospanZ& c);

SpanZ span_tensor(const SpanZ& s1, const SpanZ& s2);
CospanZ cospan_tensor(const CospanZ& c1, const CospanZ& c2);

} // namespace ihz
