#include <random>

#include "doctest.h"
#include "rcyclo/witt.hpp"

using namespace rcyclo;

TEST_CASE("irreducible polynomials") {
    CHECK(is_irreducible(2, {1, 1, 1}));
    CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
    CHECK(smallest_irreducible(2, 2) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(smallest_irreducible(3, 1).size() == 2);
    auto f = smallest_irreducible(2, 3);
    CHECK(is_irreducible(2, f));
    CHECK_THROWS(FiniteField(2, {1, 0, 1}));
}

TEST_CASE("finite field arithmetic") {
    FiniteField F(2, smallest_irreducible(2, 3));
    CHECK(F.order() == 8);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        auto a = F.random(rng);
        CHECK(F.pow(a, 8) == a);
        CHECK(F.inverse_frobenius(F.frobenius(a), 1) == a);
    }
}

TEST_CASE("Witt vector closed forms in length two") {
    // p = 2: S1 = a1 + b1 + a0 b0, P1 = a0^2 b1 + a1 b0^2.
    WittRing W2(2, 2, 2);
    const FiniteField& F = W2.field();
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto a = W2.b_random(rng), b = W2.b_random(rng);
        auto s = W2.b_add(a, b), p = W2.b_mul(a, b);
        CHECK(s[0] == F.add(a[0], b[0]));
        CHECK(s[1] == F.add(F.add(a[1], b[1]), F.mul(a[0], b[0])));
        CHECK(p[0] == F.mul(a[0], b[0]));
        CHECK(p[1] == F.add(F.mul(F.mul(a[0], a[0]), b[1]), F.mul(a[1], F.mul(b[0], b[0]))));
    }
    // p = 3: S1 = a1 + b1 - a0^2 b0 - a0 b0^2.
    WittRing W3(3, 1, 2);
    const FiniteField& G = W3.field();
    for (int k = 0; k < 100; ++k) {
        auto a = W3.b_random(rng), b = W3.b_random(rng);
        auto s = W3.b_add(a, b);
        auto cross = G.add(G.mul(G.mul(a[0], a[0]), b[0]), G.mul(a[0], G.mul(b[0], b[0])));
        CHECK(s[1] == G.sub(G.add(a[1], b[1]), cross));
    }
}

TEST_CASE("representations A and B agree") {
    std::mt19937_64 rng(9);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}}) {
        WittRing W(p, n, 4);
        for (int k = 0; k < 20; ++k) {
            auto a = W.b_random(rng), b = W.b_random(rng);
            CHECK(W.b_to_a(W.b_add(a, b)) == W.a_add(W.b_to_a(a), W.b_to_a(b)));
            CHECK(W.b_to_a(W.b_mul(a, b)) == W.a_mul(W.b_to_a(a), W.b_to_a(b)));
            CHECK(W.b_to_a(W.b_frobenius(a)) == W.a_frobenius(W.b_to_a(a)));
            CHECK(W.a_to_b(W.b_to_a(a)) == a);
        }
    }
}

TEST_CASE("Frobenius on representation A") {
    WittRing W(2, 2, 5);
    std::mt19937_64 rng(13);
    for (int k = 0; k < 20; ++k) {
        auto a = W.a_random(rng), b = W.a_random(rng);
        CHECK(W.a_frobenius(W.a_mul(a, b)) == W.a_mul(W.a_frobenius(a), W.a_frobenius(b)));
        CHECK(W.a_frobenius(W.a_frobenius(a)) == a);  // F^n = id on W(F_{p^n})
        CHECK(W.a_reduce(W.a_frobenius(a)) == W.field().frobenius(W.a_reduce(a)));
    }
    auto t = W.teichmuller(W.field().generator());
    CHECK(W.a_pow(t, 4) == t);
}

TEST_CASE("kernel and cokernel of 1 - F") {
    auto g = one_minus_f_groups(WittRing(2, 3, 5));
    CHECK(g.full_rank == 1);
    CHECK(g.torsion.empty());
    CHECK(g.kernel == AbelianGroup::cyclic(32));
    CHECK(g.cokernel == AbelianGroup::cyclic(32));
    PerfectFieldAnswer a = tcr_perfect_answer(3, 2, 4);
    CHECK(a.stabilized);
    CHECK(a.kernel_marker == "Z_3");
    CHECK(a.cokernel_marker == "Z_3");
    CHECK(a.kernel_mackey.valid());
}
