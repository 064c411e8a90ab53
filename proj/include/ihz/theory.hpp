#pragma once

#include <string>
#include <vector>

#include "ihz/circuit.hpp"

namespace ihz {

// One registered equation of the theory. Reconstructed marks equations
// whose exact shape was recovered from the semantics rather than taken
// verbatim from the standard presentation.
struct Axiom {
    std::string name;
    Circuit lhs, rhs;
    enum class Source { Standard, Reconstructed } source = Source::Standard;
};

// The registry: monoid/comonoid laws A1-A6, bialgebra laws A7-A10,
// scalar laws A11-A18, the Hopf law, the interaction laws I1-I8, the bone
// laws, and a few derived laws. Parameterized families are instantiated
// at every k in [-3, 3] plus three seed-dependent larger scalars.
std::vector<Axiom> axioms(unsigned seed = 20140703);

// Deliberately unsound equations the harness must reject.
std::vector<Axiom> negative_controls();

// equal_ih on the two sides.
bool check_axiom(const Axiom& a);

struct AxiomOutcome {
    std::string name;
    Interface interface;
    bool holds;       // the two sides denote the same subspace
    bool expected;    // what the registry claims
    bool ok() const { return holds == expected; }
};

struct CheckReport {
    std::vector<AxiomOutcome> outcomes;
    size_t failures = 0;
    bool all_ok() const { return failures == 0; }
};

// Runs every axiom (expected to hold) and every negative control
// (expected to fail).
CheckReport check_all(unsigned seed = 20140703);

std::string report_text(const CheckReport& r);
std::string report_json(const CheckReport& r);

} // namespace ihz
