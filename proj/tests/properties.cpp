#include "doctest.h"
#include "property_checks.hpp"

using namespace rcyclo;

TEST_CASE("Leibniz identity on random monomial pairs") {
    auto r = props::leibniz_pairs(10000, 2024);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("d squared is zero on stored pages") {
    auto r = props::d_squared(-14, 6, 16);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("Mackey axioms, SNF validity and correction invariance along the TCR pipeline") {
    enable_smith_audit(true);
    XAdicOptions o;
    o.lo = -8;
    o.hi = 8;
    TcrReport t = tcr_f2(o);
    auto m = props::mackey_axioms(t);
    CHECK_MESSAGE(m.ok, m.detail);
    CHECK(t.correction_invariant);
    CHECK(t.corrections_checked.size() >= 2);
    SmithAudit a = smith_audit();
    enable_smith_audit(false);
    CHECK(a.computed > 0);
    CHECK(a.failed == 0);
}
