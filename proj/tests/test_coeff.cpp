#include "doctest.h"
#include "rcyclo/coeff.hpp"

using namespace rcyclo;

TEST_CASE("presentations by name") {
    for (const char* n : {"hf2", "thr", "gfp", "tp_units", "hfpss", "tss", "hfpss_e", "tss_e"})
        CHECK(presentation_by_name(n).name().size() > 0);
    CHECK(presentation_by_name("hfp", 3).alphabet().size() == 1);
    CHECK_THROWS_AS(presentation_by_name("nope"), AlphabetError);
    CHECK_THROWS(hfp_odd_coefficients(2));
    CHECK_THROWS(x_adic_e2(4, Flavor::Tate));
}

TEST_CASE("coefficient groups of HF2 in low degrees") {
    Presentation hf2 = hf2_coefficients();
    // The positive cone F2[tau, rho] has one class in each (s, w) with w <= s <= 0.
    for (int w = -4; w <= 0; ++w)
        for (int s = -4; s <= 0; ++s) CHECK(degree_basis(hf2, {s, 0, w}).size() == (w <= s ? 1u : 0u));
    // The negative cone theta/(rho^i tau^j) sits at s = i, w = 2 + i + j.
    CHECK(degree_basis(hf2, {0, 0, 2}).size() == 1);
    CHECK(degree_basis(hf2, {1, 0, 3}).size() == 1);
    CHECK(degree_basis(hf2, {2, 0, 3}).empty());
}

TEST_CASE("gfp presentation carries the swap") {
    Presentation g = gfp_thr_f2_coefficients();
    const auto& a = g.alphabet();
    Monomial m = monomial_from({{"w1", 2}, {"w2", 1}}, a);
    CHECK(g.apply_involution(m) == monomial_from({{"w1", 1}, {"w2", 2}}, a));
}

TEST_CASE("constant Mackey functors") {
    MackeyFunctor M = constant_mackey(AbelianGroup::cyclic(4));
    CHECK(M.valid());
    CHECK(describe(M) == "fixed=Z/4 underlying=Z/4 res=id tr=*2 weyl=id");
    MackeyFunctor Z = constant_mackey(AbelianGroup::free(1));
    CHECK(Z.valid());
}

TEST_CASE("Mackey axioms catch bad structure maps") {
    MackeyFunctor M = constant_mackey(AbelianGroup::free(1));
    M.tr(0, 0) = 1;
    auto bad = M.axiom_failures();
    REQUIRE_FALSE(bad.empty());
    CHECK(bad.front().find("res.tr") != std::string::npos);
}

TEST_CASE("kernel and cokernel of a Mackey map") {
    MackeyFunctor M = constant_mackey(AbelianGroup::cyclic(8));
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    MackeyMap f{M, M, two, two};
    CHECK(f.equivariance_failures().empty());
    auto [K, C] = mackey_kernel_cokernel(f);
    CHECK(K.fixed.structure() == AbelianGroup::cyclic(2));
    CHECK(C.fixed.structure() == AbelianGroup::cyclic(2));
    CHECK(K.valid());
    CHECK(C.valid());
    CHECK(describe(C).find("res=id") != std::string::npos);
}
