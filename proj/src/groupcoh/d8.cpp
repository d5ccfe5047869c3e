#include "rcyclo/groupcoh.hpp"

namespace rcyclo {

namespace {

// sigma^a x^b  <->  4a + b
constexpr std::size_t kOrder = 8;

std::size_t d8_mul(std::size_t g, std::size_t h) {
    const std::size_t a1 = g / 4, b1 = g % 4, a2 = h / 4, b2 = h % 4;
    const std::size_t b = ((a2 ? (4 - b1) % 4 : b1) + b2) % 4;
    return 4 * (a1 ^ a2) + b;
}

constexpr std::size_t kSigma = 4;
constexpr std::size_t kX = 1;

std::size_t x_power(std::size_t k) { return k % 4; }

// Left multiplication by a sum of group elements on F2[D8].
FpMatrix left_mult(const std::vector<std::size_t>& element) {
    FpMatrix L(kOrder, kOrder, 2);
    for (auto g : element)
        for (std::size_t h = 0; h < kOrder; ++h) L(d8_mul(g, h), h) ^= 1U;
    return L;
}

FpMatrix kron_identity(const FpMatrix& A, std::size_t m) {
    FpMatrix out(A.rows() * m, A.cols() * m, A.prime());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A(i, j))
                for (std::size_t k = 0; k < m; ++k) out(i * m + k, j * m + k) = A(i, j);
    return out;
}

const std::vector<std::size_t> kXPlus1 = {kX, 0};
const std::vector<std::size_t> kSigmaX = {0, 1, 2, 3};  // Sigma_x = 1 + x + x^2 + x^3
const std::vector<std::size_t> kSigmaPlus1 = {kSigma, 0};
const std::vector<std::size_t> kSigmaXPlus1 = {d8_mul(kSigma, kX), 0};

FpMatrix horizontal(int i) { return left_mult(i % 2 == 1 ? kXPlus1 : kSigmaX); }
FpMatrix vertical(int i) { return left_mult(i % 2 == 0 ? kSigmaPlus1 : kSigmaXPlus1); }

FpMatrix right_regular(std::size_t g) {
    FpMatrix R(kOrder, kOrder, 2);
    for (std::size_t h = 0; h < kOrder; ++h) R(d8_mul(h, g), h) = 1;
    return R;
}

// F2[D8] -> F2[D8/mu2] = F2[D4], h -> class of h modulo x^2 (central).
FpMatrix mu2_projection() {
    FpMatrix Q(4, kOrder, 2);
    for (std::size_t h = 0; h < kOrder; ++h) Q(2 * (h / 4) + (h % 4) % 2, h) = 1;
    return Q;
}

FpMatrix mu2_section() {
    FpMatrix S(kOrder, 4, 2);
    for (std::size_t c = 0; c < 4; ++c) S(4 * (c / 2) + c % 2, c) = 1;
    return S;
}

}  // namespace

D8Module D8Module::trivial() {
    return {"trivial", FpMatrix::identity(1, 2), FpMatrix::identity(1, 2)};
}

D8Module D8Module::regular() { return {"regular", right_regular(kSigma), right_regular(kX)}; }

D8Module D8Module::cosets_of_sigma() {
    // Right cosets <sigma> x^b, b = 0..3.
    auto act = [](std::size_t g) {
        FpMatrix R(4, 4, 2);
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t h = d8_mul(x_power(b), g);
            R(h % 4, b) = 1;
        }
        return R;
    };
    return {"cosets_sigma", act(kSigma), act(kX)};
}

D8Module D8Module::by_name(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "regular" || name == "free") return regular();
    if (name == "cosets_sigma" || name == "d8_mod_sigma") return cosets_of_sigma();
    throw GroupCohomologyError("unknown D8 module: " + name);
}

D8Report d8_resolution_check(const D8Module& M, int width, int height) {
    if (width < 1 || height < 1) throw GroupCohomologyError("bicomplex size must be positive");
    D8Report rep;
    rep.module = M.name;
    rep.width = width;
    rep.height = height;
    const std::size_t m = M.dim();
    rep.module_dim = m;

    const FpMatrix I = FpMatrix::identity(m, 2);
    const FpMatrix& S = M.sigma;
    const FpMatrix& X = M.x;
    FpMatrix X2 = X * X;
    rep.relations_hold = S * S == I && X2 * X2 == I && S * X * S == X2 * X;
    if (!rep.relations_hold) throw GroupCohomologyError("D8 relations fail for module " + M.name);

    // Entries (i, j) with i + j <= N, each F2[D8] (x) M.
    const int N = width + height - 1;
    const std::size_t block = kOrder * m;
    std::vector<FpMatrix> H(static_cast<std::size_t>(N + 1)), V(static_cast<std::size_t>(N + 1));
    for (int i = 0; i <= N; ++i) {
        H[static_cast<std::size_t>(i)] = kron_identity(horizontal(i), m);
        V[static_cast<std::size_t>(i)] = kron_identity(vertical(i), m);
    }
    rep.squares_commute = true;
    for (int i = 1; i <= N; ++i)
        if (!(V[static_cast<std::size_t>(i - 1)] * H[static_cast<std::size_t>(i)] ==
              H[static_cast<std::size_t>(i)] * V[static_cast<std::size_t>(i)]))
            rep.squares_commute = false;

    // Total differential d_n : C_n -> C_{n-1}; C_n = sum over i = 0..n of entry (i, n - i).
    auto total = [&](int n) {
        FpMatrix d(static_cast<std::size_t>(n) * block, static_cast<std::size_t>(n + 1) * block, 2);
        for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            const std::size_t col0 = static_cast<std::size_t>(i) * block;
            if (i >= 1) {
                const FpMatrix& h = H[static_cast<std::size_t>(i)];
                const std::size_t row0 = static_cast<std::size_t>(i - 1) * block;
                for (std::size_t r = 0; r < block; ++r)
                    for (std::size_t c = 0; c < block; ++c) d(row0 + r, col0 + c) ^= h(r, c);
            }
            if (j >= 1) {
                const FpMatrix& v = V[static_cast<std::size_t>(i)];
                const std::size_t row0 = static_cast<std::size_t>(i) * block;
                for (std::size_t r = 0; r < block; ++r)
                    for (std::size_t c = 0; c < block; ++c) d(row0 + r, col0 + c) ^= v(r, c);
            }
        }
        return d;
    };
    std::vector<FpMatrix> d(static_cast<std::size_t>(N + 1));
    std::vector<std::size_t> rank(static_cast<std::size_t>(N + 2), 0);
    for (int n = 1; n <= N; ++n) {
        d[static_cast<std::size_t>(n)] = total(n);
        rank[static_cast<std::size_t>(n)] = d[static_cast<std::size_t>(n)].rank();
    }
    rep.d_squared_zero = true;
    for (int n = 2; n <= N; ++n)
        if (!(d[static_cast<std::size_t>(n - 1)] * d[static_cast<std::size_t>(n)]).is_zero()) rep.d_squared_zero = false;

    for (int n = 0; n <= N - 1; ++n) {
        const std::size_t dimC = static_cast<std::size_t>(n + 1) * block;
        const std::size_t ker = dimC - rank[static_cast<std::size_t>(n)];
        rep.homology.push_back(ker - rank[static_cast<std::size_t>(n + 1)]);
    }

    // Augmentation g (x) m -> m.
    FpMatrix eps(m, block, 2);
    for (std::size_t g = 0; g < kOrder; ++g)
        for (std::size_t k = 0; k < m; ++k) eps(k, g * m + k) = 1;
    rep.augmentation_ok = (eps * d[1]).is_zero() && eps.rank() == m;

    rep.exact = !rep.homology.empty() && rep.homology[0] == m;
    for (std::size_t n = 1; n < rep.homology.size(); ++n)
        if (rep.homology[n] != 0) rep.exact = false;

    // mu2 acts on the group-ring factor; x^2 is central so left multiplications descend.
    FpMatrix Q = kron_identity(mu2_projection(), m);
    FpMatrix Sec = kron_identity(mu2_section(), m);
    rep.mu2_sigma_x_zero = true;
    for (int i = 2; i <= N; i += 2)
        if (!(Q * H[static_cast<std::size_t>(i)] * Sec).is_zero()) rep.mu2_sigma_x_zero = false;

    // Each column is a complex with homology only in row 0.
    rep.columns_concentrated = true;
    for (int i = 0; i <= std::min(N, 1); ++i) {
        const FpMatrix& v = V[static_cast<std::size_t>(i)];
        std::size_t r = v.rank();
        if (!(v * v).is_zero() || block - 2 * r != 0 || block - r != 4 * m) rep.columns_concentrated = false;
    }
    return rep;
}

}  // namespace rcyclo
