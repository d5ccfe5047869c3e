#include "doctest.h"
#include "oracles.hpp"
#include "rcyclo/coeff.hpp"
#include "rcyclo/groupcoh.hpp"

using namespace rcyclo;

TEST_CASE("cohomology of the trivial and free modules") {
    GModule F2 = GModule::trivial(1, 2);
    for (auto& H : c2_cohomology(F2, 0, 8)) CHECK(H.dim == 1);
    for (auto& H : c2_tate(F2, -8, 8)) CHECK(H.dim == 1);
    GModule free = GModule::free(2, 2);
    auto H = c2_cohomology(free, 0, 4);
    CHECK(H[0].dim == 2);
    for (std::size_t k = 1; k < H.size(); ++k) CHECK(H[k].dim == 0);
    for (auto& T : c2_tate(free, -4, 4)) CHECK(T.dim == 0);
}

TEST_CASE("odd primes: Tate cohomology of trivial F3 vanishes") {
    GModule F3 = GModule::trivial(1, 3);
    auto H = c2_cohomology(F3, 0, 4);
    CHECK(H[0].dim == 1);
    for (std::size_t k = 1; k < H.size(); ++k) CHECK(H[k].dim == 0);
    for (auto& T : c2_tate(F3, -3, 3)) CHECK(T.dim == 0);
}

TEST_CASE("cohomology of the swap on F2[w1, w2] matches the permutation-module count") {
    Presentation g = gfp_thr_f2_coefficients();
    for (int t = 0; t <= 16; ++t) {
        GModule M = GModule::from_involution(g, {0, t, 0});
        auto H = c2_cohomology(M, 0, 6);
        for (auto& h : H) CHECK(h.dim == oracle::swap_cohomology_dim(h.s, t, false));
        auto T = c2_tate(M, -6, 6);
        for (auto& h : T) CHECK(h.dim == oracle::swap_cohomology_dim(h.s, t, true));
    }
}

TEST_CASE("Tate H^-1 is the kernel of the norm modulo (1 - sigma)") {
    Presentation g = gfp_thr_f2_coefficients();
    for (int t = 0; t <= 8; ++t) {
        GModule M = GModule::from_involution(g, {0, t, 0});
        FpMatrix N = FpMatrix::identity(M.dim(), 2) + M.sigma;
        FpMatrix D = FpMatrix::identity(M.dim(), 2) - M.sigma;
        const std::size_t expect = N.kernel().cols() - D.column_basis().cols();
        CHECK(c2_tate(M, -1, -1).front().dim == expect);
    }
}

TEST_CASE("connecting map of the norm sequence") {
    // 0 -> F2 -> F2[C2] -> F2 -> 0 has a nonzero connecting map in every degree.
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
    for (int s = 0; s <= 4; ++s) CHECK(connecting_map(ses, s)(0, 0) == 1);
    for (int s = -3; s <= 3; ++s) CHECK(connecting_map(ses, s, true)(0, 0) == 1);
    ShortExactSequence broken = ses;
    broken.q(0, 1) = 0;
    CHECK_THROWS_AS(validate(broken), GroupCohomologyError);
}

TEST_CASE("induced maps") {
    Presentation g = gfp_thr_f2_coefficients();
    GModule M = GModule::from_involution(g, {0, 2, 0});
    GModule F2 = GModule::trivial(1, 2);
    FpMatrix aug(1, M.dim(), 2);
    for (std::size_t i = 0; i < M.dim(); ++i) aug(0, i) = 1;
    for (int s = 1; s <= 4; ++s) CHECK(induced_map(M, F2, aug, s).rank() == 1);
    FpMatrix wrong(1, M.dim(), 2);
    wrong(0, 0) = 1;
    CHECK_THROWS_AS(induced_map(M, F2, wrong, 0), GroupCohomologyError);
}

TEST_CASE("D8 bicomplex resolutions") {
    for (const char* name : {"trivial", "regular", "cosets_sigma"}) {
        D8Report r = d8_resolution_check(D8Module::by_name(name), 6, 6);
        CHECK_MESSAGE(r.ok(), name);
    }
    CHECK_THROWS(D8Module::by_name("klein"));
}
