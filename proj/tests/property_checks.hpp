#pragma once

// Property checks shared by the standalone property suite and the acceptance binary.

#include <random>
#include <string>

#include "rcyclo/pipelines.hpp"

namespace props {

using namespace rcyclo;

struct Outcome {
    bool ok = true;
    std::string detail;
};

/// d(ab) = d(a) b + a d(b) for d3 on random admissible monomial pairs of both sequences.
inline Outcome leibniz_pairs(std::size_t pairs, std::uint64_t seed) {
    Outcome out;
    std::size_t bad = 0, total = 0;
    for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
        Presentation e2 = x_adic_e2(2, f);
        SpectralSequence ss(e2, f2_rules(e2, asserted_key_differential(e2)));
        const auto& a = e2.alphabet();
        const std::size_t tau = a.index_of("tau"), rho = a.index_of("rho"), theta = a.index_of("theta"),
                          u = a.index_of("u"), x = a.index_of("x");
        std::mt19937_64 rng(seed);
        auto draw = [&] {
            for (;;) {
                Monomial m = Monomial::one(a.size());
                m[theta] = static_cast<int>(rng() % 2);
                const int sign = m[theta] ? -1 : 1;
                m[tau] = sign * static_cast<int>(rng() % 6);
                m[rho] = sign * static_cast<int>(rng() % 6);
                m[u] = f == Flavor::Tate ? static_cast<int>(rng() % 11) - 5 : static_cast<int>(rng() % 6);
                m[x] = static_cast<int>(rng() % 6);
                if (auto n = e2.normalize(m)) return *n;
            }
        };
        for (std::size_t k = 0; k < pairs / 2; ++k) {
            const Monomial p = draw(), q = draw();
            GradedElement lhs;
            for (auto& [m, c] : multiply(p, q, e2).terms) lhs = add(lhs, ss.leibniz(3, m).scaled(c, e2.ring()), e2);
            GradedElement rhs = add(multiply(ss.leibniz(3, p), GradedElement::monomial(q), e2),
                                    multiply(GradedElement::monomial(p), ss.leibniz(3, q), e2), e2);
            ++total;
            if (!(lhs == rhs)) {
                if (!bad) out.detail = "fails on " + format_monomial(p, a) + " * " + format_monomial(q, a);
                ++bad;
            }
        }
    }
    out.ok = bad == 0;
    if (out.ok) out.detail = std::to_string(total) + " pairs";
    return out;
}

/// d_r d_r = 0 on every page with differentials, over a window of both sequences.
inline Outcome d_squared(int s_lo, int s_hi, int t_hi) {
    Outcome out;
    std::size_t checked = 0;
    for (auto f : {Flavor::HomotopyFixed, Flavor::Tate}) {
        Presentation e2 = x_adic_e2(2, f);
        SpectralSequence ss(e2, f2_rules(e2, derive_key_differential(e2).rule));
        for (int r = 2; r <= ss.last_ruled_page(); ++r)
            for (int s = s_lo; s <= s_hi; ++s)
                for (int t = 0; t <= t_hi; ++t) {
                    ++checked;
                    if (!d_squared_zero(ss, r, {s, t, 0})) {
                        out.ok = false;
                        out.detail = "d^2 != 0 at r=" + std::to_string(r) + " " + Tridegree{s, t, 0}.to_string();
                        return out;
                    }
                }
    }
    out.detail = std::to_string(checked) + " degrees";
    return out;
}

/// Mackey axioms on every functor the pipelines construct.
inline Outcome mackey_axioms(const TcrReport& tcr) {
    Outcome out;
    std::vector<std::pair<std::string, MackeyFunctor>> all = {{"TCR pi_0", tcr.mackey_pi0},
                                                              {"TCR pi_-1", tcr.mackey_pim1}};
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}}) {
        PerfectFieldAnswer a = tcr_perfect_answer(p, n, 4);
        all.push_back({"perfect ker", a.kernel_mackey});
        all.push_back({"perfect coker", a.cokernel_mackey});
    }
    for (auto& [name, M] : all) {
        auto f = M.axiom_failures();
        if (!f.empty()) {
            out.ok = false;
            out.detail = name + ": " + f.front();
            return out;
        }
    }
    out.detail = std::to_string(all.size()) + " functors";
    return out;
}

}  // namespace props
