#include "rcyclo/witt.hpp"

#include <algorithm>

namespace rcyclo {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

// Remainder of a by the monic g over F_p.
Poly poly_rem(Poly a, const Poly& g, std::int64_t p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = a.size(); k-- > dg;) {
        const std::int64_t c = mod(a[k], p);
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) a[k - dg + j] = mod(a[k - dg + j] - c * g[j], p);
    }
    a.resize(std::min(a.size(), dg));
    for (auto& c : a) c = mod(c, p);
    return a;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const Poly& f) {
    if (f.size() < 2 || mod(f.back(), p) != 1) throw WittError("modulus must be monic of positive degree");
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= n; ++d) {
        const std::uint64_t count = upow(p, d);
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly g(d + 1, 0);
            std::uint64_t r = k;
            for (unsigned j = 0; j < d; ++j) {
                g[j] = static_cast<std::int64_t>(r % p);
                r /= p;
            }
            g[d] = 1;
            auto rem = poly_rem(f, g, p);
            if (std::all_of(rem.begin(), rem.end(), [](auto c) { return c == 0; })) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, unsigned n) {
    if (n == 0) throw WittError("field degree must be positive");
    const std::uint64_t count = upow(p, n);
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly f(n + 1, 0);
        std::uint64_t r = k;
        // c_0 is the most significant digit.
        for (unsigned j = n; j-- > 0;) {
            f[j] = static_cast<std::int64_t>(r % p);
            r /= p;
        }
        f[n] = 1;
        if (is_irreducible(p, f)) return f;
    }
    throw WittError("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

FiniteField::FiniteField(std::uint32_t p, Poly f) : p_(p), modulus_(std::move(f)) {
    if (p < 2) throw WittError("p must be prime");
    for (auto& c : modulus_) c = mod(c, p_);
    if (!is_irreducible(p_, modulus_)) throw WittError("modulus is reducible over F_" + std::to_string(p));
}

std::uint64_t FiniteField::order() const { return upow(p_, static_cast<unsigned>(n())); }

FiniteField::Elem FiniteField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

FiniteField::Elem FiniteField::generator() const {
    Elem e = poly_rem(Poly{0, 1}, modulus_, p_);
    e.resize(n(), 0);
    return e;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    Elem c(n());
    for (std::size_t i = 0; i < n(); ++i) c[i] = mod(a[i] + b[i], p_);
    return c;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    Elem c(n());
    for (std::size_t i = 0; i < n(); ++i) c[i] = mod(a[i] - b[i], p_);
    return c;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    Poly c(2 * n() - 1, 0);
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], p_);
    Elem r = poly_rem(c, modulus_, p_);
    r.resize(n(), 0);
    return r;
}

FiniteField::Elem FiniteField::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inverse_frobenius(const Elem& a, unsigned k) const {
    Elem r = a;
    const unsigned steps = static_cast<unsigned>((n() - k % n()) % n());
    for (unsigned i = 0; i < steps; ++i) r = frobenius(r);
    return r;
}

FiniteField::Elem FiniteField::from_index(std::uint64_t k) const {
    Elem e(n());
    for (auto& c : e) {
        c = static_cast<std::int64_t>(k % p_);
        k /= p_;
    }
    return e;
}

FiniteField::Elem FiniteField::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::int64_t> dist(0, p_ - 1);
    Elem e(n());
    for (auto& c : e) c = dist(rng);
    return e;
}

// ---------------------------------------------------------------------------

WittRing::WittRing(std::uint32_t p, unsigned n, unsigned m)
    : p_(p), n_(n), m_(m), pm_(ipow(Integer(p), m)), field_(p, smallest_irreducible(p, n)) {
    if (m == 0) throw WittError("precision must be positive");
    for (auto c : field_.modulus()) lift_.push_back(Integer(c));
    // Newton iteration from X^p towards the root of f~.
    AElem r = a_pow(from_field(field_.generator()), Integer(p_));
    for (unsigned it = 0; it <= m_ + 1; ++it) r = a_sub(r, a_mul(eval_f(r), a_inverse(eval_df(r))));
    if (eval_f(r) != a_zero()) throw WittError("Hensel lift of the Frobenius failed");
    fx_ = r;
}

WittRing::AElem WittRing::reduce(AElem a) const {
    for (auto& c : a) c = floor_mod(c, pm_);
    return a;
}

WittRing::AElem WittRing::from_field(const FiniteField::Elem& a) const {
    AElem r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = Integer(a[i]);
    return r;
}

WittRing::AElem WittRing::a_one() const {
    AElem e = a_zero();
    e[0] = 1;
    return e;
}

WittRing::AElem WittRing::a_add(const AElem& a, const AElem& b) const {
    AElem c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = a[i] + b[i];
    return reduce(std::move(c));
}

WittRing::AElem WittRing::a_sub(const AElem& a, const AElem& b) const {
    AElem c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = a[i] - b[i];
    return reduce(std::move(c));
}

WittRing::AElem WittRing::a_mul(const AElem& a, const AElem& b) const {
    std::vector<Integer> c(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) c[i + j] += a[i] * b[j];
    for (std::size_t k = c.size(); k-- > n_;) {
        const Integer t = floor_mod(c[k], pm_);
        if (t == 0) continue;
        for (unsigned j = 0; j <= n_; ++j) c[k - n_ + j] -= t * lift_[j];
    }
    c.resize(n_);
    return reduce(std::move(c));
}

WittRing::AElem WittRing::a_pow(const AElem& a, const Integer& e) const {
    if (e < 0) throw WittError("negative exponent");
    AElem r = a_one(), b = a;
    Integer k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = a_mul(r, b);
        b = a_mul(b, b);
        k >>= 1;
    }
    return r;
}

WittRing::AElem WittRing::eval_f(const AElem& r) const {
    AElem acc = a_one();
    for (unsigned j = n_; j-- > 0;) {
        acc = a_mul(acc, r);
        acc[0] = floor_mod(acc[0] + lift_[j], pm_);
    }
    return acc;
}

WittRing::AElem WittRing::eval_df(const AElem& r) const {
    AElem acc = a_zero();
    acc[0] = Integer(n_);
    for (unsigned j = n_; j-- > 1;) {
        acc = a_mul(acc, r);
        acc[0] = floor_mod(acc[0] + Integer(j) * lift_[j], pm_);
    }
    return acc;
}

FiniteField::Elem WittRing::a_reduce(const AElem& a) const {
    FiniteField::Elem e(n_);
    for (unsigned i = 0; i < n_; ++i) e[i] = static_cast<std::int64_t>(floor_mod(a[i], Integer(p_)));
    return e;
}

WittRing::AElem WittRing::a_inverse(const AElem& a) const {
    FiniteField::Elem a0 = a_reduce(a);
    if (a0 == field_.zero()) throw WittError("element is not a unit");
    AElem y = from_field(field_.pow(a0, field_.order() - 2));
    AElem two = a_zero();
    two[0] = 2;
    for (unsigned it = 0; it <= m_; ++it) y = a_mul(y, a_sub(two, a_mul(a, y)));
    return y;
}

WittRing::AElem WittRing::a_frobenius(const AElem& a) const {
    AElem acc = a_zero();
    for (unsigned j = n_; j-- > 0;) {
        acc = a_mul(acc, fx_);
        acc[0] = floor_mod(acc[0] + a[j], pm_);
    }
    return acc;
}

WittRing::AElem WittRing::a_random(std::mt19937_64& rng) const {
    AElem r(n_);
    for (auto& c : r) {
        Integer v = 0;
        for (unsigned k = 0; k < m_; ++k) v = v * p_ + Integer(std::uniform_int_distribution<unsigned>(0, p_ - 1)(rng));
        c = v;
    }
    return r;
}

WittRing::AElem WittRing::teichmuller(const FiniteField::Elem& a) const {
    return a_pow(from_field(a), ipow(Integer(field_.order()), m_));
}

WittRing::BElem WittRing::b_one() const {
    BElem e = b_zero();
    e[0] = field_.one();
    return e;
}

WittRing::BElem WittRing::ghost_combine(const BElem& a, const BElem& b, bool multiply) const {
    // ghost_k = sum_{i <= k} p^i c_i^(p^(k-i)), evaluated on lifts.
    auto ghost = [&](const std::vector<AElem>& lifts, unsigned k) {
        AElem g = a_zero();
        for (unsigned i = 0; i <= k; ++i) {
            AElem term = a_pow(lifts[i], ipow(Integer(p_), k - i));
            for (auto& c : term) c *= ipow(Integer(p_), i);
            g = a_add(g, term);
        }
        return g;
    };
    std::vector<AElem> la, lb, ls;
    for (unsigned i = 0; i < m_; ++i) {
        la.push_back(from_field(a[i]));
        lb.push_back(from_field(b[i]));
    }
    BElem out(m_);
    for (unsigned k = 0; k < m_; ++k) {
        AElem target = multiply ? a_mul(ghost(la, k), ghost(lb, k)) : a_add(ghost(la, k), ghost(lb, k));
        ls.push_back(a_zero());
        AElem rest = a_sub(target, ghost(ls, k));
        const Integer pk = ipow(Integer(p_), k);
        FiniteField::Elem s(n_);
        for (unsigned i = 0; i < n_; ++i) {
            if (floor_mod(rest[i], pk) != 0) throw WittError("ghost recursion: non-divisible component");
            s[i] = static_cast<std::int64_t>(floor_mod(rest[i] / pk, Integer(p_)));
        }
        out[k] = s;
        ls.back() = from_field(s);
    }
    return out;
}

WittRing::BElem WittRing::b_add(const BElem& a, const BElem& b) const { return ghost_combine(a, b, false); }
WittRing::BElem WittRing::b_mul(const BElem& a, const BElem& b) const { return ghost_combine(a, b, true); }

WittRing::BElem WittRing::b_frobenius(const BElem& a) const {
    BElem r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = field_.frobenius(a[i]);
    return r;
}

WittRing::BElem WittRing::b_random(std::mt19937_64& rng) const {
    BElem r(m_);
    for (auto& c : r) c = field_.random(rng);
    return r;
}

WittRing::AElem WittRing::b_to_a(const BElem& b) const {
    AElem acc = a_zero();
    for (unsigned i = 0; i < m_; ++i) {
        AElem t = teichmuller(field_.inverse_frobenius(b[i], i));
        for (auto& c : t) c *= ipow(Integer(p_), i);
        acc = a_add(acc, t);
    }
    return acc;
}

WittRing::BElem WittRing::a_to_b(const AElem& a) const {
    BElem out(m_);
    AElem x = reduce(a);
    for (unsigned i = 0; i < m_; ++i) {
        FiniteField::Elem d = a_reduce(x);
        FiniteField::Elem bi = d;
        for (unsigned k = 0; k < i; ++k) bi = field_.frobenius(bi);
        out[i] = bi;
        x = a_sub(x, teichmuller(d));
        for (auto& c : x) c /= p_;
    }
    return out;
}

// ---------------------------------------------------------------------------

IntMatrix one_minus_f(const WittRing& W) {
    const unsigned n = W.n();
    IntMatrix M(n, n);
    WittRing::AElem power = W.a_one();
    for (unsigned j = 0; j < n; ++j) {
        // column j: X^j - F(X)^j
        for (unsigned i = 0; i < n; ++i) M(i, j) = floor_mod(Integer(i == j ? 1 : 0) - power[i], W.modulus());
        power = W.a_mul(power, W.frobenius_of_x());
    }
    return M;
}

OneMinusFGroups one_minus_f_groups(const WittRing& W) {
    OneMinusFGroups g;
    g.matrix = one_minus_f(W);
    const SmithForm snf = smith_normal_form(g.matrix);
    if (!snf.verify(g.matrix)) throw WittError("Smith normal form failed verification");
    const auto diag = snf.diagonal();
    std::vector<Integer> factors;
    for (unsigned i = 0; i < W.n(); ++i) {
        const Integer d = i < diag.size() ? diag[i] : Integer(0);
        const Integer e = d == 0 ? W.modulus() : Integer(boost::multiprecision::gcd(d, W.modulus()));
        if (e == 1) continue;
        factors.push_back(e);
        if (e == W.modulus()) ++g.full_rank;
        else g.torsion.push_back(e);
    }
    // ker and coker of a diagonal endomorphism of (Z/p^m)^n agree.
    g.kernel = AbelianGroup(factors);
    g.cokernel = AbelianGroup(factors);
    return g;
}

PerfectFieldAnswer tcr_perfect_answer(std::uint32_t p, unsigned n, unsigned m) {
    PerfectFieldAnswer a;
    a.p = p;
    a.n = n;
    a.m = m;
    a.at_m = one_minus_f_groups(WittRing(p, n, m));
    a.at_m1 = one_minus_f_groups(WittRing(p, n, m + 1));
    a.stabilized = a.at_m.full_rank == a.at_m1.full_rank && a.at_m.torsion == a.at_m1.torsion;
    auto marker = [&](const OneMinusFGroups& g) {
        if (!a.stabilized) return std::string("unstable");
        std::string s;
        for (unsigned k = 0; k < g.full_rank; ++k) s += (s.empty() ? "" : "+") + std::string("Z_") + std::to_string(p);
        for (auto& t : g.torsion) s += (s.empty() ? "" : "+") + std::string("Z/") + t.str();
        return s.empty() ? std::string("0") : s;
    };
    a.kernel_marker = marker(a.at_m);
    a.cokernel_marker = marker(a.at_m);
    a.kernel_mackey = constant_mackey(a.at_m.kernel);
    a.cokernel_mackey = constant_mackey(a.at_m.cokernel);
    return a;
}

}  // namespace rcyclo
