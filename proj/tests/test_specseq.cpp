#include "doctest.h"
#include "oracles.hpp"
#include "rcyclo/coeff.hpp"
#include "rcyclo/specseq.hpp"

using namespace rcyclo;

namespace {

std::vector<DifferentialRule> derived_rules(const Presentation& e2) {
    return f2_rules(e2, derive_key_differential(e2).rule);
}

CollapseOptions f2_collapse() {
    CollapseOptions o;
    o.permanent = {"u", "x", "rho", "theta"};
    o.composites = {{{"tau", 2}}};
    return o;
}

}  // namespace

TEST_CASE("differential shift") {
    CHECK(differential_shift(3) == Tridegree{-3, 2, 0});
    CHECK(differential_shift(2).stem() == -1);
}

TEST_CASE("the key differential is derived from the norm sequence") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    KeyDifferentialDerivation k = derive_key_differential(e2);
    CHECK(k.boundary_nonzero);
    CHECK(k.tau_target_dim == 1);
    CHECK(k.tau_x_target_dim == 1);
    CHECK(k.tau_target == "rho*u*x");
    CHECK(k.rule.r == 3);
    CHECK(k.rule.images == asserted_key_differential(e2).images);
}

TEST_CASE("d3 by the Leibniz rule") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    SpectralSequence ss(e2, derived_rules(e2));
    const auto& a = e2.alphabet();
    CHECK(ss.leibniz(3, monomial_from({{"tau", 1}}, a)).to_string(a) == "rho*u*x");
    CHECK(ss.leibniz(3, monomial_from({{"tau", 2}}, a)).is_zero());
    CHECK(ss.leibniz(3, monomial_from({{"tau", 3}}, a)).to_string(a) == "tau^2*rho*u*x");
    CHECK(ss.leibniz(2, monomial_from({{"tau", 1}}, a)).is_zero());
}

TEST_CASE("d squared vanishes on stored pages") {
    for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
        Presentation e2 = x_adic_e2(2, f);
        SpectralSequence ss(e2, derived_rules(e2));
        for (int r = 2; r <= 3; ++r)
            for (int s = -10; s <= 4; ++s)
                for (int t = 0; t <= 10; ++t) CHECK(d_squared_zero(ss, r, {s, t, 0}));
    }
}

TEST_CASE("E4 of the homotopy fixed point sequence at weight 0") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    SpectralSequence ss(e2, derived_rules(e2));
    CHECK(ss.piece(4, {0, 0, 0}).dim() == 1);               // 1
    CHECK(ss.piece(4, {-2, 2, 0}).dim() == 1);              // u x
    CHECK(ss.piece(4, {-1, 2, 0}).dim() == 1);              // rho x
    CHECK(ss.piece(4, {-3, 4, 0}).dim() == 0);              // rho u x^2 is hit
    CHECK(ss.piece(4, {0, 4, 0}).dim() == 1);               // tau^2 x^2
    CHECK(ss.piece(2, {0, 2, 0}).dim() == 1);               // tau x at E2
    CHECK(ss.piece(4, {0, 2, 0}).dim() == 0);               // supports d3
    CHECK(ss.piece(4, {-4, 0, 0}).dim() == 1);              // theta u^2
    CHECK_THROWS(ss.piece(6, {0, 0, 0}));
}

TEST_CASE("collapse certificates") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    SpectralSequence ss(e2, derived_rules(e2));
    Box box{-8, 4, 0, 8, 0, 0};
    CollapseCertificate c = certify_collapse(ss, box, f2_collapse());
    CHECK(c.complete);
    CHECK(c.page == 4);
    CHECK(c.undetermined.empty());

    SpectralSequence bare(e2, {});
    CollapseOptions o = f2_collapse();
    CHECK_FALSE(certify_collapse(bare, box, o).complete);
    CHECK_THROWS_AS(run_to_collapse(bare, box, o), UndeterminedDifferential);

    Presentation odd = x_adic_e2(3, Flavor::Tate);
    SpectralSequence oss(odd, {});
    CollapseOptions oo;
    oo.permanent = {"u", "x", "tau2"};
    CollapseCertificate oc = certify_collapse(oss, {-16, 8, 0, 16, 0, 0}, oo);
    CHECK(oc.complete);
    CHECK(oc.page == 2);
}

TEST_CASE("abutment of the homotopy fixed point sequence") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    SpectralSequence ss(e2, derived_rules(e2));
    ExtensionRule ux{{{"u", 1}, {"x", 1}}, 2};
    AbutmentTable t = assemble_abutment(ss, 4, 0, -12, 12, 28, ux, 8);
    auto expect = oracle::x_adic_markers(-12, 12);
    for (int n = -12; n <= 12; ++n) {
        auto m = t.entries.at(n).markers(2);
        std::sort(m.begin(), m.end());
        CHECK_MESSAGE(m == expect.at(n), "stem " << n);
    }
    // (ux)^2 in stem 0 is four times the generator.
    FpMatrix v(1, 1, 2);
    v(0, 0) = 1;
    IntMatrix h = t.homotopy_coordinates(ss, 0, {-4, 4, 0}, v);
    CHECK(h(0, 0) == 4);
    CHECK_THROWS_AS(assemble_abutment(ss, 4, 0, 0, 0, 4, {{{"rho", 1}}, 2}, 8), UndeterminedDifferential);
}
