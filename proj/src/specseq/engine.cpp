#include "rcyclo/specseq.hpp"

#include <algorithm>

namespace rcyclo {

DifferentialRule zero_rule(const Presentation& pres, int r, const std::string& provenance) {
    DifferentialRule rule;
    rule.r = r;
    rule.images.assign(pres.alphabet().size(), GradedElement{});
    rule.permanent.assign(pres.alphabet().size(), false);
    rule.provenance = provenance;
    return rule;
}

FpMatrix PagePiece::coordinates(const FpMatrix& v) const {
    if (representatives.cols() == 0) {
        if (!boundaries.hconcat(FpMatrix(v.rows(), 0, v.prime())).solve(v) && !v.is_zero())
            throw UndeterminedDifferential("vector at " + degree.to_string() + " is not a cycle on page " +
                                           std::to_string(r));
        return FpMatrix(0, 1, v.prime());
    }
    auto sol = representatives.hconcat(boundaries).solve(v);
    if (!sol)
        throw UndeterminedDifferential("vector at " + degree.to_string() + " is not a cycle on page " + std::to_string(r));
    return sol->rows_range(0, representatives.cols());
}

GradedElement PagePiece::representative(std::size_t k) const {
    GradedElement e;
    for (std::size_t i = 0; i < e2_basis.size(); ++i)
        if (representatives(i, k)) e.terms[e2_basis[i]] = representatives(i, k);
    return e;
}

SpectralSequence::SpectralSequence(Presentation e2, std::vector<DifferentialRule> rules)
    : e2_(std::move(e2)), rules_(std::move(rules)) {
    if (e2_.ring().kind != BaseRing::Kind::Fp) throw CoefficientError("E_2 pages are computed over F_p");
    std::sort(rules_.begin(), rules_.end(), [](auto& a, auto& b) { return a.r < b.r; });
    int expected = 2;
    for (auto& rule : rules_) {
        if (rule.r != expected) throw UndeterminedDifferential("rules must cover consecutive pages from 2");
        if (rule.images.empty()) rule.images.assign(e2_.alphabet().size(), GradedElement{});
        if (rule.permanent.empty()) rule.permanent.assign(e2_.alphabet().size(), false);
        ++expected;
    }
    last_ruled_ = expected - 1;
    maps_.reserve(rules_.size());
    for (auto& rule : rules_)
        maps_.emplace_back(&e2_, &e2_, differential_shift(rule.r), GradedMap::Kind::Derivation, rule.images);
}

std::vector<std::string> SpectralSequence::provenance() const {
    std::vector<std::string> out;
    for (auto& r : rules_) out.push_back("d" + std::to_string(r.r) + ": " + r.provenance);
    return out;
}

const std::vector<Monomial>& SpectralSequence::basis(const Tridegree& d) const {
    std::lock_guard lock(mu_);
    auto it = bases_.find(d);
    if (it == bases_.end()) it = bases_.emplace(d, degree_basis(e2_, d)).first;
    return it->second;
}

FpMatrix SpectralSequence::e2_vector(const GradedElement& e, const Tridegree& d) const {
    const auto& b = basis(d);
    const std::uint32_t p = e2_.ring().p;
    FpMatrix v(b.size(), 1, p);
    for (auto& [m, c] : e.terms) {
        auto it = std::lower_bound(b.begin(), b.end(), m);
        if (it == b.end() || *it != m) throw WindowError("monomial not in the E_2 basis at " + d.to_string());
        v(static_cast<std::size_t>(it - b.begin()), 0) = static_cast<std::uint32_t>(floor_mod(c, p));
    }
    return v;
}

GradedElement SpectralSequence::leibniz(int r, const Monomial& m) const { return leibniz_map(r).apply(m); }

const GradedMap& SpectralSequence::leibniz_map(int r) const {
    if (r < 2 || r > last_ruled_) throw UndeterminedDifferential("no differential rule for page " + std::to_string(r));
    return maps_[static_cast<std::size_t>(r - 2)];
}

const PagePiece& SpectralSequence::piece(int r, const Tridegree& d) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(r, d);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return *it->second;
    auto p = compute_piece(r, d);
    return *pieces_.emplace(key, std::move(p)).first->second;
}

const FpMatrix& SpectralSequence::differential(int r, const Tridegree& d) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(r, d);
    auto it = diffs_.find(key);
    if (it != diffs_.end()) return *it->second;
    auto m = compute_differential(r, d);
    return *diffs_.emplace(key, std::move(m)).first->second;
}

std::unique_ptr<PagePiece> SpectralSequence::compute_piece(int r, const Tridegree& d) const {
    const std::uint32_t p = e2_.ring().p;
    auto out = std::make_unique<PagePiece>();
    out->r = r;
    out->degree = d;
    out->e2_basis = basis(d);
    const std::size_t n = out->e2_basis.size();
    if (r == 2) {
        out->cycles = FpMatrix::identity(n, p);
        out->boundaries = FpMatrix(n, 0, p);
        out->representatives = FpMatrix::identity(n, p);
        return out;
    }
    if (r - 1 > last_ruled_) throw UndeterminedDifferential("page " + std::to_string(r - 1) + " has no differential rule");
    const PagePiece& prev = piece(r - 1, d);
    if (n == 0) {
        out->cycles = out->boundaries = out->representatives = FpMatrix(0, 0, p);
        return out;
    }
    const FpMatrix& dout = differential(r - 1, d);
    FpMatrix kept = prev.representatives * dout.kernel();
    out->cycles = kept.hconcat(prev.boundaries).column_basis();

    const Tridegree src = d - differential_shift(r - 1);
    const PagePiece& psrc = piece(r - 1, src);
    FpMatrix hit(n, 0, p);
    if (psrc.dim() > 0) {
        const FpMatrix& din = differential(r - 1, src);
        hit = prev.representatives * din;
    }
    out->boundaries = prev.boundaries.hconcat(hit).column_basis();
    out->representatives = complement_basis(out->cycles, out->boundaries);
    return out;
}

std::unique_ptr<FpMatrix> SpectralSequence::compute_differential(int r, const Tridegree& d) const {
    const PagePiece& src = piece(r, d);
    const Tridegree td = d + differential_shift(r);
    const PagePiece& tgt = piece(r, td);
    auto M = std::make_unique<FpMatrix>(tgt.dim(), src.dim(), e2_.ring().p);
    if (src.dim() == 0) return M;
    const GradedMap& f = leibniz_map(r);
    for (std::size_t k = 0; k < src.dim(); ++k) {
        GradedElement img = f.apply(src.representative(k));
        FpMatrix v = e2_vector(img, td);
        FpMatrix c = tgt.coordinates(v);
        for (std::size_t i = 0; i < tgt.dim(); ++i) (*M)(i, k) = c(i, 0);
    }
    return M;
}

const PagePiece& turn_page(const SpectralSequence& ss, int r, const Tridegree& d) { return ss.piece(r + 1, d); }

bool d_squared_zero(const SpectralSequence& ss, int r, const Tridegree& d) {
    const FpMatrix& a = ss.differential(r, d);
    const FpMatrix& b = ss.differential(r, d + differential_shift(r));
    if (a.cols() == 0 || b.rows() == 0) return true;
    return (b * a).is_zero();
}

}  // namespace rcyclo
