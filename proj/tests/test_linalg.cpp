#include <random>

#include "doctest.h"
#include "rcyclo/linalg.hpp"

using namespace rcyclo;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

Integer gcd_all(const IntMatrix& m) {
    Integer g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g = boost::multiprecision::gcd(g, abs(m(i, j)));
    return g;
}

}  // namespace

TEST_CASE("smith form of a classic example") {
    IntMatrix A = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SmithForm s = smith_normal_form(A);
    CHECK(s.verify(A));
    CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});
    CHECK(s.U * A * s.V == s.D);
}

TEST_CASE("smith form against determinant and entry gcd") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        IntMatrix A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = static_cast<long>(rng() % 21) - 10;
        SmithForm s = smith_normal_form(A);
        REQUIRE(s.verify(A));
        auto d = s.diagonal();
        Integer prod = 1;
        for (auto& x : d) prod *= x;
        for (std::size_t k = d.size(); k < n; ++k) prod = 0;
        CHECK(prod == abs(determinant(A)));
        if (!d.empty() && !A.is_zero()) CHECK(d[0] == gcd_all(A));
        for (std::size_t k = 1; k < d.size(); ++k)
            if (d[k] != 0) CHECK(d[k] % d[k - 1] == 0);
    }
}

TEST_CASE("integer kernel and solve") {
    IntMatrix A = from_rows({{1, 2, 3}});
    IntMatrix K = integer_kernel(A);
    CHECK(K.cols() == 2);
    CHECK((A * K).is_zero());
    IntMatrix b = from_rows({{7}});
    auto x = integer_solve(A, b);
    REQUIRE(x);
    CHECK(A * *x == b);
    CHECK_FALSE(integer_solve(from_rows({{2}}), from_rows({{3}})));
}

TEST_CASE("abelian groups from presentations") {
    FGModule M{2, from_rows({{2, 0}, {0, 3}})};
    CHECK(M.structure() == AbelianGroup::cyclic(6));
    CHECK(FGModule::free(2).structure() == AbelianGroup::free(2));
    CHECK(FGModule::from_orders({4, 2}).structure().order() == Integer(8));
    CHECK(AbelianGroup::free(1).order() == std::nullopt);
}

TEST_CASE("kernel and cokernel of multiplication by 2 on Z/4") {
    FGModule Z4 = FGModule::from_orders({4});
    ModuleHom f{Z4, Z4, from_rows({{2}})};
    REQUIRE(f.well_defined());
    CHECK(hom_kernel(f).module.structure() == AbelianGroup::cyclic(2));
    CHECK(hom_cokernel(f).module.structure() == AbelianGroup::cyclic(2));
    CHECK(hom_image(f).module.structure() == AbelianGroup::cyclic(2));
    ModuleHom bad{FGModule::from_orders({2}), Z4, from_rows({{1}})};
    CHECK_FALSE(bad.well_defined());
}

TEST_CASE("express_in recovers coordinates in a subgroup") {
    FGModule Z8 = FGModule::from_orders({8});
    Subquotient sub{FGModule::from_orders({4}), from_rows({{2}})};
    auto c = express_in(sub, Z8, from_rows({{6}}));
    REQUIRE(c);
    CHECK(floor_mod((*c)(0, 0) * 2 - 6, 8) == 0);
    CHECK_FALSE(express_in(sub, Z8, from_rows({{1}})));
}

TEST_CASE("matrices over F_p") {
    FpMatrix A(2, 3, 3);
    A(0, 0) = 1; A(0, 1) = 2; A(1, 2) = 1;
    CHECK(A.rank() == 2);
    FpMatrix K = A.kernel();
    CHECK(K.cols() == 1);
    CHECK((A * K).is_zero());
    FpMatrix b(2, 1, 3);
    b(0, 0) = 1; b(1, 0) = 2;
    auto x = A.solve(b);
    REQUIRE(x);
    CHECK(A * *x == b);
    CHECK(fp_inverse(2, 5) == 3);
    FpMatrix Z = FpMatrix::identity(3, 2);
    FpMatrix B = Z.columns(0, 1);
    CHECK(complement_basis(Z, B).cols() == 2);
}
