#include "rcyclo/coeff.hpp"

namespace rcyclo {

namespace {

using K = ExponentKind;

std::vector<std::string> cone_rules() {
    return {rules::kConeSquareZero, rules::kConeTruncation, rules::kConeLeibnizOffset};
}

void require_prime(std::uint32_t p) {
    if (p < 2) throw CoefficientError("p must be prime");
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw CoefficientError("p must be prime");
}

}  // namespace

Presentation hf2_coefficients() {
    Alphabet a({{"tau", {0, 0, -1}, K::ConeDependent},
                {"rho", {-1, 0, -1}, K::ConeDependent},
                {"theta", {0, 0, 2}, K::ConeMarker}});
    Presentation p("hf2", a, BaseRing::fp(2), cone_rules());
    p.metadata = {{"spectrum", "HF2"}, {"flavor", "C2-fixed points, RO(C2)-graded"}};
    return p;
}

Presentation hfp_odd_coefficients(std::uint32_t p) {
    require_prime(p);
    if (p == 2) throw CoefficientError("hfp_odd_coefficients needs an odd prime");
    Alphabet a({{"tau2", {0, 0, -4}, K::Laurent}});
    Presentation pr("hfp", a, BaseRing::fp(p), {});
    pr.metadata = {{"spectrum", "HF" + std::to_string(p)}, {"flavor", "C2-fixed points, RO(C2)-graded"},
                   {"p", std::to_string(p)}};
    return pr;
}

Presentation thr_coefficients(std::uint32_t p) {
    require_prime(p);
    Presentation base = p == 2 ? hf2_coefficients() : hfp_odd_coefficients(p);
    auto gens = base.alphabet().generators();
    gens.push_back({"x", {0, 2, 1}, K::NonNegative});
    Presentation pr("thr", Alphabet(gens), base.ring(), base.rule_names());
    pr.metadata = {{"spectrum", "THR(HF" + std::to_string(p) + ")"}, {"flavor", "C2-fixed points"},
                   {"p", std::to_string(p)}};
    return pr;
}

Presentation gfp_thr_f2_coefficients() {
    Alphabet a({{"w1", {0, 1, 0}, K::NonNegative}, {"w2", {0, 1, 0}, K::NonNegative}});
    Presentation p("gfp", a, BaseRing::fp(2), {});
    p.set_involution({1, 0});
    p.metadata = {{"spectrum", "THR(HF2)"}, {"flavor", "geometric fixed points"}};
    return p;
}

Presentation tp_units_presentation() {
    Alphabet a({{"u", {0, -2, 0}, K::NonNegative}, {"x", {0, 2, 0}, K::NonNegative}});
    Presentation p("tp_units", a, BaseRing::integers(), {std::string(rules::kUnitPairPrefix) + "u,x"});
    p.metadata = {{"spectrum", "TP(HFp)"}, {"flavor", "integral, u x = 1"}};
    return p;
}

Presentation x_adic_e2(std::uint32_t p, Flavor flavor) {
    require_prime(p);
    const K ukind = flavor == Flavor::Tate ? K::Laurent : K::NonNegative;
    const std::string name = flavor == Flavor::Tate ? "tss" : "hfpss";
    if (p == 2) {
        Alphabet a({{"tau", {0, 0, -1}, K::ConeDependent},
                    {"rho", {-1, 0, -1}, K::ConeDependent},
                    {"theta", {0, 0, 2}, K::ConeMarker},
                    {"u", {-2, 0, -1}, ukind},
                    {"x", {0, 2, 1}, K::NonNegative}});
        Presentation pr(name, a, BaseRing::fp(2), cone_rules());
        pr.metadata = {{"spectrum", flavor == Flavor::Tate ? "TPR(HF2)" : "TCR-(HF2)"}, {"p", "2"}};
        return pr;
    }
    Alphabet a({{"tau2", {0, 0, -4}, K::Laurent}, {"u", {-2, 0, -1}, ukind}, {"x", {0, 2, 1}, K::NonNegative}});
    Presentation pr(name, a, BaseRing::fp(p), {});
    pr.metadata = {{"spectrum", std::string(flavor == Flavor::Tate ? "TPR" : "TCR-") + "(HF" + std::to_string(p) + ")"},
                   {"p", std::to_string(p)}};
    return pr;
}

Presentation underlying_e2(std::uint32_t p, Flavor flavor) {
    require_prime(p);
    const K ukind = flavor == Flavor::Tate ? K::Laurent : K::NonNegative;
    Alphabet a({{"u", {-2, 0, 0}, ukind}, {"x", {0, 2, 0}, K::NonNegative}});
    Presentation pr(flavor == Flavor::Tate ? "tss_e" : "hfpss_e", a, BaseRing::fp(p), {});
    pr.metadata = {{"spectrum", std::string(flavor == Flavor::Tate ? "TP" : "TC-") + "(HF" + std::to_string(p) + ")"},
                   {"p", std::to_string(p)}};
    return pr;
}

Presentation presentation_by_name(const std::string& name, std::uint32_t p) {
    if (name == "hf2") return hf2_coefficients();
    if (name == "hfp") return hfp_odd_coefficients(p);
    if (name == "thr") return thr_coefficients(p);
    if (name == "gfp") return gfp_thr_f2_coefficients();
    if (name == "tp_units") return tp_units_presentation();
    if (name == "hfpss") return x_adic_e2(p, Flavor::HomotopyFixed);
    if (name == "tss") return x_adic_e2(p, Flavor::Tate);
    if (name == "hfpss_e") return underlying_e2(p, Flavor::HomotopyFixed);
    if (name == "tss_e") return underlying_e2(p, Flavor::Tate);
    throw AlphabetError("unknown presentation: " + name);
}

}  // namespace rcyclo
