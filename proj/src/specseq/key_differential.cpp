#include "rcyclo/specseq.hpp"

namespace rcyclo {

namespace {

// Z/2 trivial -> F2[mu2] -> Z/2 trivial, the norm sequence.
ShortExactSequence norm_sequence() {
    ShortExactSequence ses;
    ses.A = GModule::trivial(1, 2);
    ses.B = GModule::free(1, 2);
    ses.C = GModule::trivial(1, 2);
    ses.i = FpMatrix(2, 1, 2);
    ses.i(0, 0) = 1;
    ses.i(1, 0) = 1;
    ses.q = FpMatrix(1, 2, 2);
    ses.q(0, 0) = 1;
    ses.q(0, 1) = 1;
    return ses;
}

GradedElement named(const Presentation& e2, const std::map<std::string, int>& m) {
    return GradedElement::monomial(monomial_from(m, e2.alphabet()));
}

void require_f2_alphabet(const Presentation& e2) {
    if (e2.ring().p != 2) throw UndeterminedDifferential("the key differential is a p = 2 statement");
    for (const char* g : {"tau", "rho", "theta", "u", "x"}) e2.alphabet().index_of(g);
}

DifferentialRule rule_with_tau_image(const Presentation& e2, GradedElement image, const std::string& provenance) {
    DifferentialRule rule = zero_rule(e2, 3, provenance);
    rule.images[e2.alphabet().index_of("tau")] = std::move(image);
    for (const char* g : {"rho", "theta", "u", "x"}) rule.permanent[e2.alphabet().index_of(g)] = true;
    return rule;
}

}  // namespace

KeyDifferentialDerivation derive_key_differential(const Presentation& e2) {
    require_f2_alphabet(e2);
    KeyDifferentialDerivation out;

    // d2(x2bar) is the connecting map H^0 -> H^1 of the norm sequence.
    out.connecting_matrix = connecting_map(norm_sequence(), 0);
    out.boundary_nonzero = !out.connecting_matrix.is_zero();
    if (!out.boundary_nonzero) throw UndeterminedDifferential("connecting map vanishes; no differential to transport");

    // Transport along tau -> x2bar: d3(tau) is nonzero, so it is the unique class in its target degree.
    const Alphabet& a = e2.alphabet();
    const Monomial tau = monomial_from({{"tau", 1}}, a);
    const Monomial tau_x = monomial_from({{"tau", 1}, {"x", 1}}, a);
    const auto tgt = degree_basis(e2, e2.degree(tau) + differential_shift(3));
    const auto tgt_x = degree_basis(e2, e2.degree(tau_x) + differential_shift(3));
    out.tau_target_dim = tgt.size();
    out.tau_x_target_dim = tgt_x.size();
    if (tgt.size() != 1) throw UndeterminedDifferential("target of d3(tau) is not one-dimensional");
    if (tgt_x.size() != 1) throw UndeterminedDifferential("target of d3(tau x) is not one-dimensional");
    out.tau_target = format_monomial(tgt[0], a);
    out.tau_x_target = format_monomial(tgt_x[0], a);
    out.rule = rule_with_tau_image(e2, GradedElement::monomial(tgt[0]),
                                   "derived: connecting map of the norm sequence, transported along tau -> x2bar");

    // Leibniz closure must reproduce the unique class for tau x.
    GradedMap d(&e2, &e2, differential_shift(3), GradedMap::Kind::Derivation, out.rule.images);
    if (!(d.apply(tau_x) == GradedElement::monomial(tgt_x[0])))
        throw UndeterminedDifferential("d3(tau x) does not hit the unique target class");
    return out;
}

DifferentialRule asserted_key_differential(const Presentation& e2) {
    require_f2_alphabet(e2);
    return rule_with_tau_image(e2, named(e2, {{"u", 1}, {"rho", 1}, {"x", 1}}), "asserted: d3(tau) = u rho x");
}

std::vector<DifferentialRule> f2_rules(const Presentation& e2, const DifferentialRule& d3) {
    DifferentialRule d2 = zero_rule(e2, 2, "E2 is concentrated in even t");
    d2.permanent = d3.permanent;
    return {d2, d3};
}

}  // namespace rcyclo
