#include "ihz/theory.hpp"

#include <random>
#include <sstream>

#include "ihz/semantics.hpp"

namespace ihz {

namespace {

Circuit g_add() { return gen(GenKind::Add); }
Circuit g_zero() { return gen(GenKind::Zero); }
Circuit g_dup() { return gen(GenKind::Dup); }
Circuit g_del() { return gen(GenKind::Del); }
Circuit g_coadd() { return gen(GenKind::Coadd); }
Circuit g_cozero() { return gen(GenKind::Cozero); }
Circuit g_codup() { return gen(GenKind::Codup); }
Circuit g_codel() { return gen(GenKind::Codel); }
Circuit neg() { return amp(Int(-1)); }

std::string k_str(const Int& k) { return to_string(k); }

} // namespace

std::vector<Axiom> axioms(unsigned seed) {
    using Src = Axiom::Source;
    std::vector<Axiom> out;
    auto reg = [&](std::string name, Circuit lhs, Circuit rhs, Src src = Src::Standard) {
        out.push_back({std::move(name), std::move(lhs), std::move(rhs), src});
    };

    // White monoid.
    reg("A1-unit", seq(tensor(g_zero(), id(1)), g_add()), id(1));
    reg("A2-comm", seq(sym(), g_add()), g_add());
    reg("A3-assoc", seq(tensor(g_add(), id(1)), g_add()),
        seq(tensor(id(1), g_add()), g_add()));

    // Black comonoid.
    reg("A4-counit", seq(g_dup(), tensor(g_del(), id(1))), id(1));
    reg("A5-cocomm", seq(g_dup(), sym()), g_dup());
    reg("A6-coassoc", seq(g_dup(), tensor(g_dup(), id(1))),
        seq(g_dup(), tensor(id(1), g_dup())));

    // Bialgebra interaction.
    reg("A7-add-del", seq(g_add(), g_del()), tensor(g_del(), g_del()));
    reg("A8-add-dup", seq(g_add(), g_dup()),
        seq(tensor(g_dup(), g_dup()),
            seq(tensor(id(1), tensor(sym(), id(1))), tensor(g_add(), g_add()))));
    reg("A9-zero-dup", seq(g_zero(), g_dup()), tensor(g_zero(), g_zero()));
    reg("A10-zero-del", seq(g_zero(), g_del()), id(0));

    // Scalar instantiation set: [-3, 3] plus three larger draws.
    std::vector<Int> ks;
    for (int k = -3; k <= 3; ++k)
        ks.push_back(k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> big(4, 99);
    for (int i = 0; i < 3; ++i) {
        int v = big(rng);
        ks.push_back(i % 2 == 0 ? Int(v) : Int(-v));
    }

    reg("A11-amp-one", amp(Int(1)), id(1));
    for (const Int& k1 : {Int(2), Int(-3), ks[7]})
        for (const Int& k2 : {Int(3), Int(-2), ks[8]})
            reg("A12-amp-mul(" + k_str(k1) + "," + k_str(k2) + ")",
                seq(amp(k1), amp(k2)), amp(k1 * k2));
    for (const Int& k : ks) {
        reg("A13-add-amp(" + k_str(k) + ")", seq(g_add(), amp(k)),
            seq(tensor(amp(k), amp(k)), g_add()));
        reg("A14-zero-amp(" + k_str(k) + ")", seq(g_zero(), amp(k)), g_zero());
        reg("A15-amp-dup(" + k_str(k) + ")", seq(amp(k), g_dup()),
            seq(g_dup(), tensor(amp(k), amp(k))));
        reg("A16-amp-del(" + k_str(k) + ")", seq(amp(k), g_del()), g_del());
    }
    reg("A17-amp-zero", amp(Int(0)), seq(g_del(), g_zero()));
    for (const Int& k1 : {Int(2), Int(-1), ks[9]})
        for (const Int& k2 : {Int(3), Int(-4), ks[7]})
            reg("A18-amp-sum(" + k_str(k1) + "," + k_str(k2) + ")",
                seq(g_dup(), seq(tensor(amp(k1), amp(k2)), g_add())), amp(k1 + k2));

    reg("Hopf", seq(g_dup(), seq(tensor(neg(), id(1)), g_add())),
        seq(g_del(), g_zero()));

    // Interaction of the theory with its mirror image.
    for (const Int& l : ks) {
        if (l == 0)
            continue;
        reg("I1-amp-coamp(" + k_str(l) + ")", seq(amp(l), coamp(l)), id(1));
        reg("I2-coamp-amp(" + k_str(l) + ")", seq(coamp(l), amp(l)), id(1));
    }
    reg("I3-white-frobenius-left", seq(tensor(g_coadd(), id(1)), tensor(id(1), g_add())),
        seq(g_add(), g_coadd()));
    reg("I3-white-frobenius-right", seq(tensor(id(1), g_coadd()), tensor(g_add(), id(1))),
        seq(g_add(), g_coadd()));
    reg("I4-black-frobenius-left", seq(tensor(g_dup(), id(1)), tensor(id(1), g_codup())),
        seq(g_codup(), g_dup()));
    reg("I4-black-frobenius-right", seq(tensor(id(1), g_dup()), tensor(g_codup(), id(1))),
        seq(g_codup(), g_dup()));
    reg("I5-zero-coadd", seq(g_zero(), g_coadd()),
        seq(g_codel(), seq(g_dup(), tensor(id(1), neg()))), Src::Reconstructed);
    reg("I6-add-cozero", seq(g_add(), g_cozero()),
        seq(tensor(id(1), neg()), seq(g_codup(), g_del())), Src::Reconstructed);
    reg("I7-white-separable", seq(g_coadd(), g_add()), id(1));
    reg("I8-black-separable", seq(g_dup(), g_codup()), id(1));

    // Bone laws and derived laws.
    reg("bone-white", seq(g_zero(), g_cozero()), id(0));
    reg("bone-black", seq(g_codel(), g_del()), id(0));
    reg("antipode-involutive", seq(neg(), neg()), id(1));

    return out;
}

std::vector<Axiom> negative_controls() {
    using Src = Axiom::Source;
    std::vector<Axiom> out;
    out.push_back({"control-amp-mismatch", seq(amp(Int(2)), coamp(Int(3))), id(1),
                   Src::Standard});
    out.push_back({"control-add-vs-codup", gen(GenKind::Add), gen(GenKind::Codup),
                   Src::Standard});
    out.push_back({"control-discard-vs-id", seq(gen(GenKind::Del), gen(GenKind::Zero)),
                   id(1), Src::Standard});
    return out;
}

bool check_axiom(const Axiom& a) { return equal_ih(a.lhs, a.rhs); }

CheckReport check_all(unsigned seed) {
    CheckReport rep;
    auto run = [&](const Axiom& a, bool expected) {
        AxiomOutcome o{a.name, typecheck(a.lhs), check_axiom(a), expected};
        if (!o.ok())
            ++rep.failures;
        rep.outcomes.push_back(std::move(o));
    };
    for (const Axiom& a : axioms(seed))
        run(a, true);
    for (const Axiom& a : negative_controls())
        run(a, false);
    return rep;
}

std::string report_text(const CheckReport& r) {
    std::ostringstream out;
    for (const auto& o : r.outcomes) {
        out << (o.ok() ? "PASS" : "FAIL") << " " << o.name << " " << o.interface.str();
        if (!o.expected)
            out << " (negative control)";
        out << "\n";
    }
    if (r.outcomes.empty())
        out << "warning: no equations registered, vacuous pass\n";
    out << (r.all_ok() ? "OK" : "FAILED") << " " << r.outcomes.size() - r.failures << "/"
        << r.outcomes.size() << "\n";
    return out.str();
}

std::string report_json(const CheckReport& r) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < r.outcomes.size(); ++i) {
        const auto& o = r.outcomes[i];
        if (i)
            out << ",";
        out << "{\"name\":\"" << o.name << "\",\"arity\":" << o.interface.arity
            << ",\"coarity\":" << o.interface.coarity
            << ",\"holds\":" << (o.holds ? "true" : "false")
            << ",\"expected\":" << (o.expected ? "true" : "false")
            << ",\"ok\":" << (o.ok() ? "true" : "false") << "}";
    }
    out << "]\n";
    return out.str();
}

} // namespace ihz
