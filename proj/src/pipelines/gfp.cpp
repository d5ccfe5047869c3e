#include "rcyclo/groupcoh.hpp"
#include "rcyclo/pipelines.hpp"

namespace rcyclo {

namespace {

struct Block {
    int s = 0;
    int t = 0;
    std::size_t offset = 0;
    std::size_t dim = 0;
};

class GfpData {
public:
    GfpData(int T) : T_(T), pres_(gfp_thr_f2_coefficients()) {
        for (int t = 0; t <= T; ++t) {
            const Tridegree d{0, t, 0};
            bases_.push_back(degree_basis(pres_, d));
            modules_.push_back(GModule::from_involution(pres_, d));
        }
    }

    int T() const { return T_; }
    const Presentation& presentation() const { return pres_; }
    const GModule& module(int t) const { return modules_.at(t); }
    const std::vector<Monomial>& basis(int t) const { return bases_.at(t); }

    const CohomologyGroup& group(int s, int t, bool tate) const {
        auto key = std::make_tuple(s, t, tate);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto gs = tate ? c2_tate(module(t), s, s) : c2_cohomology(module(t), s, s);
        return cache_.emplace(key, gs.front()).first->second;
    }

    std::size_t index_of(int t, const Monomial& m) const {
        const auto& b = basis(t);
        auto it = std::lower_bound(b.begin(), b.end(), m);
        if (it == b.end() || *it != m) throw GroupCohomologyError("monomial outside the degree basis");
        return static_cast<std::size_t>(it - b.begin());
    }

    FpMatrix unit(int t, const Monomial& m) const {
        FpMatrix v(basis(t).size(), 1, 2);
        v(index_of(t, m), 0) = 1;
        return v;
    }

    /// Source blocks H^s(M_t), t - s = n, s >= 0.
    std::vector<Block> source_blocks(int n) const {
        std::vector<Block> out;
        std::size_t off = 0;
        for (int t = std::max(0, n); t <= T_; ++t) {
            const int s = t - n;
            const std::size_t dim = group(s, t, false).dim;
            if (dim) out.push_back({s, t, off, dim});
            off += dim;
        }
        return out;
    }

    /// Target blocks of the Tate construction, t - s = n.
    std::vector<Block> target_blocks(int n) const {
        std::vector<Block> out;
        std::size_t off = 0;
        for (int t = 0; t <= T_; ++t) {
            const int s = t - n;
            const std::size_t dim = group(s, t, true).dim;
            if (dim) out.push_back({s, t, off, dim});
            off += dim;
        }
        return out;
    }

private:
    int T_;
    Presentation pres_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<GModule> modules_;
    mutable std::map<std::tuple<int, int, bool>, CohomologyGroup> cache_;
};

std::size_t total(const std::vector<Block>& bs) { return bs.empty() ? 0 : bs.back().offset + bs.back().dim; }

const Block* find_block(const std::vector<Block>& bs, int t) {
    for (auto& b : bs)
        if (b.t == t) return &b;
    return nullptr;
}

enum class Assignment { A, B };

StemMaps gfp_stem(const GfpData& D, int n, Assignment which) {
    const auto src = D.source_blocks(n), tgt = D.target_blocks(n);
    StemMaps m;
    m.source = FGModule::free_over(total(src), 2);
    m.target = FGModule::free_over(total(tgt), 2);
    m.can = IntMatrix(total(tgt), total(src));
    m.phi = IntMatrix(total(tgt), total(src));
    for (auto& b : src) {
        const CohomologyGroup& H = D.group(b.s, b.t, false);
        const CohomologyGroup& Ht = D.group(b.s, b.t, true);
        const Block* tb = find_block(tgt, b.t);
        for (std::size_t k = 0; k < b.dim; ++k) {
            const FpMatrix rep = H.representatives.columns(k, 1);
            if (tb) {
                FpMatrix c = class_coordinates(Ht, rep);
                for (std::size_t i = 0; i < tb->dim; ++i) m.can(tb->offset + i, b.offset + k) = c(i, 0);
            }
            if (b.s != 0) continue;
            const auto& basis = D.basis(b.t);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!rep(i, 0)) continue;
                const int a = basis[i][0], c = basis[i][1];
                const int e = which == Assignment::A ? a : c;
                const int tp = 2 * e;
                const int sp = which == Assignment::A ? a - c : c - a;
                if (tp > D.T()) continue;
                const Block* pb = find_block(tgt, tp);
                if (!pb || pb->s != sp) throw GroupCohomologyError("psi lands outside the Tate window");
                FpMatrix coords = class_coordinates(D.group(sp, tp, true), D.unit(tp, Monomial({e, e})));
                for (std::size_t r = 0; r < pb->dim; ++r)
                    m.phi(pb->offset + r, b.offset + k) = (m.phi(pb->offset + r, b.offset + k) + coords(r, 0)) % 2;
            }
        }
    }
    // f = psi + can over F2; fiber_of forms can - phi, so negate.
    for (std::size_t i = 0; i < m.phi.rows(); ++i)
        for (std::size_t j = 0; j < m.phi.cols(); ++j) m.phi(i, j) = -m.phi(i, j);
    return m;
}

bool same_groups(const FiberReport& a, const FiberReport& b) {
    for (auto& [n, d] : a.degrees)
        if (!b.degrees.count(n) || b.degrees.at(n).markers != d.markers) return false;
    return a.degrees.size() == b.degrees.size();
}

}  // namespace

GfpReport gfp_tcr_f2(const GfpOptions& opt) {
    if (opt.t_max < 2 || opt.hi + 1 > opt.t_max) throw WindowError("gfp window needs hi + 1 <= t_max");
    GfpData D(opt.t_max);
    GfpReport rep;
    const unsigned M = default_precision();

    std::map<int, StemMaps> A, B;
    for (int n = opt.lo; n <= opt.hi + 1; ++n) {
        A[n] = gfp_stem(D, n, Assignment::A);
        B[n] = gfp_stem(D, n, Assignment::B);
        rep.hfp_dims[n] = A[n].source.generators;
        rep.tate_dims[n] = A[n].target.generators;
    }
    rep.fiber = fiber_of("TCR(HF2)^gfp", A, 2, M, opt.lo, opt.hi);
    FiberReport alt = fiber_of("TCR(HF2)^gfp", B, 2, M, opt.lo, opt.hi);
    rep.swap_invariant = same_groups(rep.fiber, alt);
    rep.fiber.stabilized = true;

    for (int n = opt.lo; n <= opt.hi; ++n) rep.expected_dims[n] = n >= -1 ? 1 : 0;

    // Collapse: every possible target piece injects into the cohomology of the trivial module.
    rep.collapse_certified = true;
    const GModule F2 = GModule::trivial(1, 2);
    for (bool tate : {false, true}) {
        std::size_t checked = 0;
        for (int t = 0; t <= D.T(); ++t) {
            FpMatrix aug(1, D.basis(t).size(), 2);
            for (std::size_t i = 0; i < aug.cols(); ++i) aug(0, i) = 1;
            const int s_lo = tate ? opt.lo - D.T() : 2;
            for (int s = s_lo; s <= D.T() - opt.lo + 1; ++s) {
                const std::size_t dim = D.group(s, t, tate).dim;
                if (!dim) continue;
                ++checked;
                if (induced_map(D.module(t), F2, aug, s, tate).rank() != dim) {
                    rep.collapse_certified = false;
                    rep.certificate.push_back(std::string(tate ? "Tate" : "HFP") + " target (" + std::to_string(s) +
                                              ", " + std::to_string(t) + ") does not inject");
                }
            }
        }
        rep.certificate.push_back(std::string(tate ? "Tate" : "HFP") + ": " + std::to_string(checked) +
                                  " target pieces inject under the augmentation");
    }
    // Naturality: y^i -> z^i at t = 0.
    bool natural = true;
    for (int s = 0; s <= D.T(); ++s) {
        const auto& H = D.group(s, 0, false);
        FpMatrix c = class_coordinates(D.group(s, 0, true), H.representatives);
        natural = natural && c.rows() == 1 && c.cols() == 1 && c(0, 0) == 1;
    }
    rep.certificate.push_back(std::string("can(y^i) = z^i at t = 0: ") + (natural ? "yes" : "no"));
    if (!natural) rep.collapse_certified = false;

    rep.fiber.provenance.push_back("homotopy fixed points and Tate construction for mu2 on THR(HF2)^phiC2, pi_t truncated at t <= " +
                                   std::to_string(D.T()));
    rep.fiber.provenance.push_back("f = psi + can with psi(w1^a w2^b) = e(w1^a w2^a) in Hhat^(a-b)(M_2a)");
    return rep;
}

}  // namespace rcyclo
