#include "doctest.h"
#include "oracles.hpp"
#include "rcyclo/pipelines.hpp"

using namespace rcyclo;

namespace {

XAdicOptions small() {
    XAdicOptions o;
    o.lo = -8;
    o.hi = 8;
    return o;
}

}  // namespace

TEST_CASE("group markers") {
    CHECK(group_markers(AbelianGroup(std::vector<Integer>{2, 256}), 2, 8) == std::vector<std::string>{"Z/2", "Z_2"});
    CHECK(group_markers(AbelianGroup::cyclic(9), 3, 4) == std::vector<std::string>{"Z/3^2"});
}

TEST_CASE("abutment tables match the closed-form families") {
    auto expect = oracle::x_adic_markers(-8, 8);
    for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
        XAdicRun run = run_x_adic(2, f, small());
        CHECK(run.certificate.complete);
        CHECK(run.table.stabilized);
        for (int n = -8; n <= 8; ++n) CHECK_MESSAGE(run.table.entries.at(n).markers == expect.at(n), "stem " << n);
    }
    PiTable t = tcr_minus_f2(small());
    CHECK(t.entries.at(0).markers == std::vector<std::string>{"Z_2"});
    CHECK(t.entries.at(-1).markers.empty());
    CHECK(t.entries.at(-4).classes.size() == 1);
    CHECK(t.entries.at(-4).classes[0] == "theta*u^2");
}

TEST_CASE("can and phi on generators") {
    Presentation m = x_adic_e2(2, Flavor::HomotopyFixed);
    Presentation t = Presentation("tss_Z", x_adic_e2(2, Flavor::Tate).alphabet(), BaseRing::integers(),
                                  x_adic_e2(2, Flavor::Tate).rule_names());
    const auto& a = m.alphabet();
    FrobeniusData d{2, 2, {}};
    CHECK(apply_can(m, t, monomial_from({{"theta", 1}, {"u", 2}}, a)).to_string(t.alphabet()) == "theta*u^2");
    CHECK(apply_phi(m, t, monomial_from({{"u", 1}, {"x", 1}}, a), d).to_string(t.alphabet()) == "2");
    CHECK(apply_phi(m, t, monomial_from({{"x", 2}}, a), d).to_string(t.alphabet()) == "u^-2");
    CHECK(apply_phi(m, t, monomial_from({{"rho", 1}}, a), d).to_string(t.alphabet()) == "rho");
    FrobeniusData c{2, 2, {{"rho", 4}, {"u", -2}}};
    CHECK(apply_phi(m, t, monomial_from({{"tau", 2}}, a), c).terms.size() == 2);
}

TEST_CASE("TCR(HF2) in a small window") {
    TcrReport r = tcr_f2(small());
    auto expect = oracle::tcr_markers(2, -8, 8);
    for (auto& [n, d] : r.fiber.degrees) {
        CHECK_MESSAGE(d.markers == expect.at(n), "degree " << n);
        CHECK(d.rank_identity);
        CHECK_FALSE(d.extension_ambiguous);
    }
    CHECK(r.fiber.stabilized);
    CHECK(r.correction_invariant);
    CHECK(r.corrections_checked.size() == 2);
    CHECK(r.key_differential_derived);
    CHECK(r.key_differential_matches_asserted);
    CHECK(describe(r.mackey_pi0).find("res=id tr=*2") != std::string::npos);
    CHECK(describe(r.mackey_pim1).find("res=id tr=*2") != std::string::npos);
}

TEST_CASE("odd primes") {
    for (std::uint32_t p : {3u, 5u}) {
        OddReport r = tcr_odd(p, small());
        auto expect = oracle::tcr_markers(static_cast<int>(p), -8, 8);
        for (auto& [n, d] : r.fiber.degrees) CHECK_MESSAGE(d.markers == expect.at(n), "p=" << p << " degree " << n);
        CHECK(r.lambda_invariant);
        CHECK(r.fiber.stabilized);
    }
    CHECK_THROWS(tcr_odd(2, small()));
}

TEST_CASE("geometric fixed points") {
    GfpReport r = gfp_tcr_f2({-4, 6, 16});
    CHECK(r.collapse_certified);
    CHECK(r.swap_invariant);
    for (auto& [n, d] : r.fiber.degrees) {
        CHECK(d.group.num_summands() == r.expected_dims.at(n));
        const bool even = n >= 0 && n % 2 == 0;
        CHECK(d.kernel.num_summands() == (even ? 1u : 0u));
    }
    for (int n = -4; n <= 6; ++n) CHECK(r.fiber.cokernel.at(n).num_summands() == (n >= 0 && n % 2 == 0 ? 1u : 0u));
    CHECK_THROWS(gfp_tcr_f2({-4, 20, 16}));
}

TEST_CASE("perfect fields") {
    PerfectReport r = tcr_perfect(2, 1, 5);
    CHECK(r.answer.kernel_marker == "Z_2");
    CHECK(r.mackey_pi0 == "fixed=Z/32 underlying=Z/32 res=id tr=*2 weyl=id");
    // Same Mackey shape as the fixed-point pipeline.
    TcrReport t = tcr_f2(small());
    auto strip = [](const std::string& s) { return s.substr(s.find(" res=")); };
    CHECK(strip(r.mackey_pi0) == strip(describe(t.mackey_pi0)));
    CHECK(strip(r.mackey_pim1) == strip(describe(t.mackey_pim1)));
}
