#pragma once

#include "ihz/circuit.hpp"
#include "ihz/intmat.hpp"
#include "ihz/linrel.hpp"

namespace ihz {

// The relational denotation: generators map to the graphs of their
// matrices (co-generators to the converses), Seq to relational
// composition, Tensor to direct sum.
LinRel sem_rel(const Circuit& c);

// Span-valued evaluation: generators through the covariant embedding
// (id, A), co-generators through (A, id); Seq composes by pullback. The
// result is canonical only up to span isomorphism.
SpanZ sem_span(const Circuit& c);

// Cospan-valued evaluation: generators to (A, id), co-generators to
// (id, A); Seq composes by pushout.
CospanZ sem_cospan(const Circuit& c);

// Leg-wise transpose, turning a span into a cospan.
CospanZ tra_span_to_cospan(const SpanZ& s);

// Decides circuit equality through the denoted subspaces. Circuits with
// different interfaces are unequal.
bool equal_ih(const Circuit& c1, const Circuit& c2);

// Canonical span-form factorization: mirror(circuit of A) ; circuit of B
// where (A, B) is the canonical span of the denoted subspace. Semantics
// preserved; structurally canonical, so it decides equality.
Circuit normal_form(const Circuit& c);

// Dual factorization through the canonical cospan: circuit of P ;
// mirror(circuit of Q).
Circuit cospan_form(const Circuit& c);

// The fraction circuit coamp(q) ; amp(p), denoting the line { (qt, pt) }.
Circuit frac_circuit(const Int& p, const Int& q);

} // namespace ihz
