#include <cmath>

#include "doctest.h"
#include "rcyclo/coeff.hpp"
#include "rcyclo/gralg.hpp"

using namespace rcyclo;

TEST_CASE("tridegrees of named monomials") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    const auto& a = e2.alphabet();
    CHECK(tridegree({{"tau", 1}, {"x", 1}}, a) == Tridegree{0, 2, 0});
    CHECK(tridegree({{"rho", 1}, {"u", 1}, {"x", 1}}, a) == Tridegree{-3, 2, -1});
    CHECK(tridegree({{"theta", 1}, {"u", 2}}, a).stem() == -4);
    CHECK_THROWS_AS(tridegree({{"sigma", 1}}, a), AlphabetError);
}

TEST_CASE("normalization applies the cone rules") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    const auto& a = e2.alphabet();
    CHECK_FALSE(e2.normalize(monomial_from({{"theta", 2}}, a)));
    CHECK_FALSE(e2.normalize(monomial_from({{"theta", 1}, {"tau", 1}}, a)));
    CHECK(e2.normalize(monomial_from({{"theta", 1}, {"tau", -3}, {"rho", -1}}, a)));
    CHECK_FALSE(e2.normalize(monomial_from({{"tau", -1}}, a)));
}

TEST_CASE("degree bases") {
    Presentation hf2 = hf2_coefficients();
    auto b = degree_basis(hf2, {0, 0, -2});
    REQUIRE(b.size() == 1);
    CHECK(format_monomial(b[0], hf2.alphabet()) == "tau^2");
    CHECK(degree_basis(hf2, {-2, 0, -2}).size() == 1);
    CHECK(degree_basis(hf2, {0, 0, 3}).size() == 1);  // theta/tau
    CHECK(degree_basis(hf2, {1, 0, 0}).empty());
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    CHECK(degree_basis(e2, {0, 0, 0}).size() == 1);
}

TEST_CASE("unbounded slices raise") {
    Alphabet a({{"a", {0, 0, 0}, ExponentKind::Laurent}});
    Presentation p("flat", a, BaseRing::fp(2), {});
    CHECK_THROWS_AS(degree_basis(p, {0, 0, 0}), WindowError);
}

TEST_CASE("integral unit pairs") {
    Presentation tp = tp_units_presentation();
    const auto& a = tp.alphabet();
    GradedElement prod = multiply(monomial_from({{"u", 3}}, a), monomial_from({{"x", 2}}, a), tp);
    CHECK(prod.to_string(a) == "u");
    CHECK(degree_basis(tp, {0, 0, 0}).size() == 1);
}

TEST_CASE("graded maps and kernels") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    const auto& a = e2.alphabet();
    // Multiplication by x as a ring map sending x to x and everything else to itself is the identity.
    std::vector<GradedElement> images;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Monomial m = Monomial::one(a.size());
        m[i] = 1;
        images.push_back(GradedElement::monomial(m));
    }
    GradedMap id(&e2, &e2, {0, 0, 0}, GradedMap::Kind::RingMap, images);
    const Tridegree d{-2, 2, 0};
    auto kc = kernel_cokernel(id, d);
    CHECK(kc.kernel.module.structure().is_trivial());
    CHECK(kc.cokernel.module.structure().is_trivial());
    IntMatrix M = id.matrix_at(d);
    CHECK(M == IntMatrix::identity(M.rows()));
}

TEST_CASE("kernel_cokernel against brute force over F2") {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    const auto& a = e2.alphabet();
    // Derivation d(tau) = rho u x, zero elsewhere.
    std::vector<GradedElement> images(a.size());
    images[a.index_of("tau")] = GradedElement::monomial(monomial_from({{"rho", 1}, {"u", 1}, {"x", 1}}, a));
    GradedMap d3(&e2, &e2, {-3, 2, 0}, GradedMap::Kind::Derivation, images);
    for (int s = -6; s <= 2; ++s)
        for (int t = 0; t <= 8; t += 2) {
            const Tridegree d{s, t, 0};
            IntMatrix M = d3.matrix_at(d);
            // Brute-force rank over F2 by enumerating all source vectors (dimensions are small).
            const std::size_t n = M.cols();
            if (n > 12) continue;
            std::size_t kernel_size = 0;
            for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                bool zero = true;
                for (std::size_t i = 0; i < M.rows() && zero; ++i) {
                    Integer acc = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (mask >> j & 1) acc += M(i, j);
                    zero = acc % 2 == 0;
                }
                kernel_size += zero;
            }
            auto kc = kernel_cokernel(d3, d);
            auto order = kc.kernel.module.structure().order();
            REQUIRE(order);
            CHECK(*order == Integer(kernel_size));
            const std::size_t rank = n - static_cast<std::size_t>(std::log2(static_cast<double>(kernel_size)));
            auto corder = kc.cokernel.module.structure().order();
            REQUIRE(corder);
            CHECK(*corder == ipow(Integer(2), static_cast<unsigned>(M.rows() - rank)));
        }
}
