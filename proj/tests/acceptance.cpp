// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <bitset>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "property_checks.hpp"
#include "rcyclo/groupcoh.hpp"

using namespace rcyclo;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (ok) detail.str(why);
        ok = false;
    }
};

XAdicOptions window(int lo, int hi) {
    XAdicOptions o;
    o.lo = lo;
    o.hi = hi;
    return o;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ",") + x;
    return "[" + s + "]";
}

void compare_table(Verdict& v, const PiTable& t, const std::map<int, std::vector<std::string>>& expect) {
    if (!t.stabilized) v.fail("table not stabilized");
    for (auto& [n, m] : expect) {
        auto it = t.entries.find(n);
        const auto got = it == t.entries.end() ? std::vector<std::string>{} : it->second.markers;
        if (got != m) v.fail("degree " + std::to_string(n) + ": expected " + join(m) + ", got " + join(got));
    }
    if (v.ok) v.detail << expect.size() << " degrees match";
}

Verdict criterion1() {
    Verdict v;
    compare_table(v, tcr_minus_f2(window(-12, 12)), oracle::x_adic_markers(-12, 12));
    return v;
}

Verdict criterion2() {
    Verdict v;
    compare_table(v, tpr_f2(window(-12, 12)), oracle::x_adic_markers(-12, 12));
    return v;
}

TcrReport tcr_report;

Verdict criterion3() {
    Verdict v;
    tcr_report = tcr_f2(window(-11, 11));
    compare_table(v, tcr_report.fiber.as_table(), oracle::tcr_markers(2, -11, 11));
    for (auto& [n, d] : tcr_report.fiber.degrees) {
        if (!d.rank_identity) v.fail("rank identity fails at " + std::to_string(n));
        if (d.extension_ambiguous) v.fail("ambiguous extension at " + std::to_string(n));
    }
    // ux detects twice the generator of pi_0.
    XAdicRun run = run_x_adic(2, Flavor::HomotopyFixed, window(-2, 2));
    FpMatrix e(1, 1, 2);
    e(0, 0) = 1;
    IntMatrix h = run.abutment.homotopy_coordinates(*run.ss, 0, {-2, 2, 0}, e);
    if (h.rows() != 1 || h(0, 0) != 2) v.fail("ux does not detect 2");
    for (auto* M : {&tcr_report.mackey_pi0, &tcr_report.mackey_pim1})
        if (describe(*M).find("res=id tr=*2") == std::string::npos) v.fail("Mackey: " + describe(*M));
    if (v.ok) v.detail << ", ux detects 2, Mackey " << describe(tcr_report.mackey_pi0);
    return v;
}

Verdict criterion4() {
    Verdict v;
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    KeyDifferentialDerivation k = derive_key_differential(e2);
    if (!k.boundary_nonzero) v.fail("connecting map vanishes on x2bar");
    if (k.tau_target_dim != 1 || k.tau_x_target_dim != 1) v.fail("target piece not one dimensional");
    if (k.tau_target != "rho*u*x") v.fail("d3(tau) = " + k.tau_target);
    for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
        Presentation p = x_adic_e2(2, f);
        SpectralSequence derived(p, f2_rules(p, derive_key_differential(p).rule));
        SpectralSequence asserted(p, f2_rules(p, asserted_key_differential(p)));
        for (int s = -16; s <= 16; ++s)
            for (int t = 0; t <= 24; ++t) {
                const PagePiece& a = derived.piece(4, {s, t, 0});
                const PagePiece& b = asserted.piece(4, {s, t, 0});
                if (a.dim() != b.dim()) v.fail("E4 differs at " + Tridegree{s, t, 0}.to_string());
            }
    }
    if (!tcr_report.key_differential_derived || !tcr_report.key_differential_matches_asserted)
        v.fail("TCR pipeline did not use the derived differential");
    if (v.ok) v.detail << "d3(tau) = " << k.tau_target << ", E4 pages identical";
    return v;
}

Verdict criterion5() {
    Verdict v;
    std::size_t evidence = 0;
    for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
        XAdicRun run = run_x_adic(2, f, window(-12, 12));
        const auto& c = run.certificate;
        if (!c.complete || c.page != 4 || c.r_max < 20) v.fail("p=2 certificate incomplete");
        evidence += c.evidence.size();
    }
    for (std::uint32_t p : {3u, 5u})
        for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
            XAdicRun run = run_x_adic(p, f, window(-12, 12));
            if (!run.certificate.complete || run.certificate.page != 2)
                v.fail("p=" + std::to_string(p) + " certificate not at E2");
            evidence += run.certificate.evidence.size();
        }
    if (v.ok) v.detail << "E4 at p=2, E2 at p=3,5, r <= 20, " << evidence << " evidence lines";
    return v;
}

Verdict criterion6() {
    Verdict v;
    GfpReport r = gfp_tcr_f2({-10, 10, 24});
    if (!r.collapse_certified) v.fail("collapse not certified");
    const std::vector<std::string> f2{"Z/2"}, none{};
    for (int n = -10; n <= 10; ++n) {
        const auto& want = n >= 0 && n % 2 == 0 ? f2 : none;
        if (group_markers(r.fiber.kernel.at(n), 2, r.fiber.precision) != want) v.fail("ker at " + std::to_string(n));
        if (group_markers(r.fiber.cokernel.at(n), 2, r.fiber.precision) != want)
            v.fail("coker at " + std::to_string(n));
        const auto& g = r.fiber.degrees.at(n).group;
        const std::vector<std::string> fib(r.expected_dims.at(n), "Z/2");
        if (group_markers(g, 2, r.fiber.precision) != fib) v.fail("fiber at " + std::to_string(n) + ": " + g.to_string());
    }
    if (v.ok) v.detail << "ker = coker = F2 in even degrees 0..10, fiber F2[tau^2] + Sigma^-1 F2[tau^2]";
    return v;
}

// Brute-force oracle: swap matrix on the monomial basis of F2[w1, w2]_t and bitset elimination.
std::size_t rank_f2(std::vector<std::bitset<64>> rows) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < 64 && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv][c]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c]) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

std::size_t one_plus_swap_rank(int t) {
    std::vector<std::bitset<64>> rows(static_cast<std::size_t>(t + 1));
    for (int a = 0; a <= t; ++a) {
        rows[a][a] = rows[a][a] ^ 1;
        rows[a][t - a] = rows[a][t - a] ^ 1;
    }
    return rank_f2(rows);
}

Verdict criterion7() {
    Verdict v;
    Presentation g = gfp_thr_f2_coefficients();
    std::size_t checked = 0;
    for (int t = 0; t <= 16; ++t) {
        GModule M = GModule::from_involution(g, {0, t, 0});
        const std::size_t n = static_cast<std::size_t>(t + 1), r = one_plus_swap_rank(t);
        for (auto& h : c2_cohomology(M, 0, 10)) {
            const std::size_t brute = h.s == 0 ? n - r : n - 2 * r;
            if (h.dim != brute || h.dim != oracle::swap_cohomology_dim(h.s, t, false))
                v.fail("H^" + std::to_string(h.s) + " at t=" + std::to_string(t));
            ++checked;
        }
        for (auto& h : c2_tate(M, -10, 10)) {
            if (h.dim != n - 2 * r || h.dim != oracle::swap_cohomology_dim(h.s, t, true))
                v.fail("Hhat^" + std::to_string(h.s) + " at t=" + std::to_string(t));
            ++checked;
        }
    }
    if (v.ok) v.detail << checked << " groups match closed form and brute force";
    return v;
}

Verdict criterion8() {
    Verdict v;
    std::size_t top = 0;
    for (const char* name : {"trivial", "regular", "cosets_sigma"}) {
        D8Report r = d8_resolution_check(D8Module::by_name(name), 12, 12);
        if (!r.ok()) v.fail(std::string(name) + " fails");
        if (r.homology.size() < 11) v.fail(std::string(name) + ": fewer than 11 total degrees checked");
        top = r.homology.size() - 1;
        if (!r.mu2_sigma_x_zero) v.fail(std::string(name) + ": Sigma_x nonzero on the mu2 quotient");
    }
    if (v.ok) v.detail << "3 modules exact through total degree " << top << ", Sigma_x = 0";
    return v;
}

Verdict criterion9() {
    Verdict v;
    std::mt19937_64 rng(20);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + ")";
        PerfectFieldAnswer a = tcr_perfect_answer(p, n, 5);
        const std::string zp = "Z_" + std::to_string(p);
        if (!a.stabilized || a.kernel_marker != zp || a.cokernel_marker != zp) v.fail(tag + " markers");
        for (auto* g : {&a.at_m, &a.at_m1})
            if (g->full_rank != 1 || !g->torsion.empty()) v.fail(tag + " not free of rank one");
        WittRing W(p, n, 5);
        if (a.at_m.kernel != AbelianGroup::cyclic(W.modulus()) || a.at_m.cokernel != AbelianGroup::cyclic(W.modulus()))
            v.fail(tag + " groups are not Z/p^5");
        for (int k = 0; k < 100; ++k) {
            auto x = W.b_random(rng), y = W.b_random(rng);
            if (W.b_to_a(W.b_add(x, y)) != W.a_add(W.b_to_a(x), W.b_to_a(y)) ||
                W.b_to_a(W.b_mul(x, y)) != W.a_mul(W.b_to_a(x), W.b_to_a(y)) ||
                W.b_to_a(W.b_frobenius(x)) != W.a_frobenius(W.b_to_a(x)) || W.a_to_b(W.b_to_a(x)) != x) {
                v.fail(tag + " A and B disagree");
                break;
            }
        }
    }
    if (v.ok) v.detail << "6 cases free of rank one at m=5, stable at m=6, A = B on 100 samples";
    return v;
}

Verdict criterion10() {
    Verdict v;
    std::vector<std::pair<std::string, props::Outcome>> all = {
        {"leibniz", props::leibniz_pairs(10000, 2024)},
        {"d^2", props::d_squared(-14, 6, 16)},
        {"mackey", props::mackey_axioms(tcr_report)},
    };
    SmithAudit a = smith_audit();
    all.push_back({"snf", {a.computed > 0 && a.failed == 0,
                           std::to_string(a.computed) + " forms, " + std::to_string(a.failed) + " invalid"}});
    all.push_back({"phi correction", {tcr_report.correction_invariant && tcr_report.corrections_checked.size() >= 2,
                                      std::to_string(tcr_report.corrections_checked.size()) + " choices"}});
    for (auto& [name, o] : all) {
        if (!o.ok) v.fail(name + ": " + o.detail);
    }
    if (v.ok)
        for (std::size_t i = 0; i < all.size(); ++i)
            v.detail << (i ? "; " : "") << all[i].first << " " << all[i].second.detail;
    return v;
}

}  // namespace

int main() {
    enable_smith_audit(true);
    Verdict (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                               criterion6, criterion7, criterion8, criterion9, criterion10};
    int failed = 0;
    for (int i = 0; i < 10; ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i]();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i + 1 << (v.ok ? " PASS: " : " FAIL: ") << v.detail.str() << " (" << std::fixed
                  << std::setprecision(1) << secs << "s)" << std::endl;
        failed += !v.ok;
    }
    return failed ? 1 : 0;
}
