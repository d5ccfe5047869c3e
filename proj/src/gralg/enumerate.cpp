#include "rcyclo/gralg.hpp"

#include <set>

namespace rcyclo {

namespace {

using Q = boost::multiprecision::cpp_rational;

// a . y + b >= 0
struct Ineq {
    std::vector<Q> a;
    Q b;
};

Integer floor_q(const Q& x) {
    Integer n = boost::multiprecision::numerator(x);
    Integer d = boost::multiprecision::denominator(x);
    Integer q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

Integer ceil_q(const Q& x) { return -floor_q(-x); }

void normalize_ineq(Ineq& in) {
    for (auto& c : in.a)
        if (c != 0) {
            Q scale = c < 0 ? Q(-c) : c;
            for (auto& x : in.a) x /= scale;
            in.b /= scale;
            return;
        }
}

bool same(const Ineq& x, const Ineq& y) { return x.b == y.b && x.a == y.a; }

// Fourier-Motzkin: removes variable v.
std::vector<Ineq> eliminate(const std::vector<Ineq>& sys, std::size_t v) {
    std::vector<Ineq> pos, neg, out;
    for (auto& in : sys) {
        if (in.a[v] > 0) pos.push_back(in);
        else if (in.a[v] < 0) neg.push_back(in);
        else out.push_back(in);
    }
    for (auto& p : pos)
        for (auto& n : neg) {
            Q cp = p.a[v], cn = -n.a[v];
            Ineq c{std::vector<Q>(p.a.size()), p.b * cn + n.b * cp};
            for (std::size_t k = 0; k < c.a.size(); ++k) c.a[k] = p.a[k] * cn + n.a[k] * cp;
            c.a[v] = 0;
            normalize_ineq(c);
            bool dup = false;
            for (auto& o : out)
                if (same(o, c)) { dup = true; break; }
            if (!dup) out.push_back(std::move(c));
        }
    return out;
}

struct CaseEnumerator {
    const Presentation& pres;
    std::vector<std::size_t> vars;     // alphabet indices being solved for
    std::vector<int> signs;            // +1: >= 0, -1: <= 0, 0: free
    std::vector<std::size_t> pivot_var, free_var;  // positions in vars
    std::vector<std::vector<Q>> pivot_row;         // coefficients on free vars
    std::vector<Q> pivot_rhs;
    std::vector<Ineq> base;            // constraints in free vars
    Monomial seed;
    std::set<Monomial>& out;

    void run() {
        std::vector<Integer> fixed;
        dfs(fixed);
    }

    void dfs(std::vector<Integer>& fixed) {
        const std::size_t j = fixed.size();
        const std::size_t f = free_var.size();
        if (j == f) {
            emit(fixed);
            return;
        }
        // Substitute fixed values, then project onto y_j.
        std::vector<Ineq> sys;
        for (auto& in : base) {
            Ineq c{in.a, in.b};
            for (std::size_t k = 0; k < j; ++k) {
                c.b += c.a[k] * Q(fixed[k]);
                c.a[k] = 0;
            }
            sys.push_back(std::move(c));
        }
        for (std::size_t v = f; v-- > j + 1;) sys = eliminate(sys, v);
        std::optional<Integer> lo, hi;
        for (auto& in : sys) {
            const Q& a = in.a[j];
            if (a == 0) {
                if (in.b < 0) return;
                continue;
            }
            if (a > 0) {
                Integer l = ceil_q(-in.b / a);
                if (!lo || l > *lo) lo = l;
            } else {
                Integer h = floor_q(in.b / -a);
                if (!hi || h < *hi) hi = h;
            }
        }
        if (!lo || !hi)
            throw WindowError("degree slice of presentation '" + pres.name() + "' is unbounded in generator " +
                              pres.alphabet()[vars[free_var[j]]].name);
        if (*hi - *lo > 1000000) throw WindowError("degree slice too large to enumerate");
        for (Integer y = *lo; y <= *hi; ++y) {
            fixed.push_back(y);
            dfs(fixed);
            fixed.pop_back();
        }
    }

    void emit(const std::vector<Integer>& y) {
        Monomial m = seed;
        for (std::size_t k = 0; k < free_var.size(); ++k) m[vars[free_var[k]]] = static_cast<int>(y[k]);
        for (std::size_t r = 0; r < pivot_var.size(); ++r) {
            Q v = pivot_rhs[r];
            for (std::size_t k = 0; k < free_var.size(); ++k) v -= pivot_row[r][k] * Q(y[k]);
            if (boost::multiprecision::denominator(v) != 1) return;
            Integer iv = boost::multiprecision::numerator(v);
            int sg = signs[pivot_var[r]];
            if ((sg > 0 && iv < 0) || (sg < 0 && iv > 0)) return;
            m[vars[pivot_var[r]]] = static_cast<int>(iv);
        }
        auto n = pres.normalize(m);
        if (n && *n == m) out.insert(std::move(m));
    }
};

void enumerate_case(const Presentation& pres, const Tridegree& d, int marker_value,
                    const std::vector<bool>& forced_zero, std::set<Monomial>& out) {
    const Alphabet& A = pres.alphabet();
    const auto mk = A.marker();
    Monomial seed = Monomial::one(A.size());
    Tridegree r = d;
    if (mk) {
        seed[*mk] = marker_value;
        r = r - A[*mk].degree * marker_value;
    }
    std::vector<std::size_t> vars;
    std::vector<int> signs;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (mk && i == *mk) continue;
        if (forced_zero[i]) continue;
        vars.push_back(i);
        switch (A[i].kind) {
            case ExponentKind::NonNegative: signs.push_back(1); break;
            case ExponentKind::Laurent: signs.push_back(0); break;
            case ExponentKind::ConeDependent: signs.push_back(marker_value ? -1 : 1); break;
            case ExponentKind::ConeMarker: signs.push_back(1); break;
        }
    }
    const std::size_t nv = vars.size();
    // Row-reduce the 3 x nv system over Q.
    std::vector<std::vector<Q>> M(3, std::vector<Q>(nv + 1));
    for (std::size_t k = 0; k < nv; ++k) {
        const Tridegree& g = A[vars[k]].degree;
        M[0][k] = g.s;
        M[1][k] = g.t;
        M[2][k] = g.w;
    }
    M[0][nv] = r.s;
    M[1][nv] = r.t;
    M[2][nv] = r.w;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nv && row < 3; ++col) {
        std::size_t piv = row;
        while (piv < 3 && M[piv][col] == 0) ++piv;
        if (piv == 3) continue;
        std::swap(M[piv], M[row]);
        Q inv = Q(1) / M[row][col];
        for (auto& x : M[row]) x *= inv;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == row || M[i][col] == 0) continue;
            Q f = M[i][col];
            for (std::size_t k = 0; k <= nv; ++k) M[i][k] -= f * M[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < 3; ++i)
        if (M[i][nv] != 0) return;  // inconsistent

    std::vector<bool> is_pivot(nv, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_var;
    for (std::size_t k = 0; k < nv; ++k)
        if (!is_pivot[k]) free_var.push_back(k);

    CaseEnumerator en{pres, vars, signs, pivots, free_var, {}, {}, {}, seed, out};
    const std::size_t f = free_var.size();
    for (std::size_t rr = 0; rr < pivots.size(); ++rr) {
        std::vector<Q> coeffs(f);
        for (std::size_t k = 0; k < f; ++k) coeffs[k] = M[rr][free_var[k]];
        en.pivot_row.push_back(coeffs);
        en.pivot_rhs.push_back(M[rr][nv]);
        if (signs[pivots[rr]] != 0) {
            Q sg = signs[pivots[rr]];
            Ineq in{std::vector<Q>(f), sg * M[rr][nv]};
            for (std::size_t k = 0; k < f; ++k) in.a[k] = -sg * coeffs[k];
            en.base.push_back(std::move(in));
        }
    }
    for (std::size_t k = 0; k < f; ++k) {
        int sg = signs[free_var[k]];
        if (sg == 0) continue;
        Ineq in{std::vector<Q>(f), 0};
        in.a[k] = sg;
        en.base.push_back(std::move(in));
    }
    en.run();
}

}  // namespace

std::vector<Monomial> degree_basis(const Presentation& pres, const Tridegree& d) {
    const Alphabet& A = pres.alphabet();
    std::set<Monomial> out;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::string prefix = rules::kUnitPairPrefix;
    for (auto& r : pres.rule_names())
        if (r.rfind(prefix, 0) == 0) {
            auto body = r.substr(prefix.size());
            auto comma = body.find(',');
            pairs.emplace_back(A.index_of(body.substr(0, comma)), A.index_of(body.substr(comma + 1)));
        }
    std::vector<int> marker_values = A.marker() ? std::vector<int>{0, 1} : std::vector<int>{0};
    const std::size_t combos = std::size_t{1} << pairs.size();
    for (int mu : marker_values)
        for (std::size_t c = 0; c < combos; ++c) {
            std::vector<bool> forced(A.size(), false);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                forced[(c >> k) & 1U ? pairs[k].second : pairs[k].first] = true;
            enumerate_case(pres, d, mu, forced, out);
        }
    return {out.begin(), out.end()};
}

}  // namespace rcyclo
