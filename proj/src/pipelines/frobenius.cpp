#include <functional>

#include "rcyclo/pipelines.hpp"

namespace rcyclo {

namespace {

Presentation integral_copy(const Presentation& pres) {
    return Presentation(pres.name() + "_Z", pres.alphabet(), BaseRing::integers(), pres.rule_names());
}

std::optional<std::size_t> slot(const Presentation& pres, const char* name) { return pres.alphabet().find(name); }

// Renames a monomial of `source` into the alphabet of `target` (generators matched by name).
std::optional<Monomial> transport(const Presentation& source, const Presentation& target, const Monomial& m,
                                  const std::vector<std::string>& dropped = {}) {
    Monomial out = Monomial::one(target.alphabet().size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        const std::string& name = source.alphabet()[i].name;
        if (std::find(dropped.begin(), dropped.end(), name) != dropped.end()) continue;
        auto j = target.alphabet().find(name);
        if (!j) throw AlphabetError("generator " + name + " has no image in " + target.name());
        out[*j] = m[i];
    }
    return target.normalize(out);
}

using MonomialMap = std::function<GradedElement(const Monomial&)>;

Integer p_valuation(Integer c, std::uint32_t p, unsigned& v) {
    v = 0;
    if (c == 0) return c;
    while (c % p == 0) {
        c /= p;
        ++v;
    }
    return c;
}

// Homotopy coordinates (one per target chain) of an integral E_2 element of the target sequence.
IntMatrix homotopy_image(const SpectralSequence& ss, const AbutmentTable& tab, int stem, const GradedElement& img) {
    const Presentation& pres = ss.e2();
    const std::uint32_t p = pres.ring().p;
    const Integer top = ipow(Integer(p), tab.precision);
    const AbutmentEntry& entry = tab.entries.at(stem);
    IntMatrix out(entry.chains.size(), 1);
    std::map<std::pair<Tridegree, unsigned>, GradedElement> leftovers;

    auto accumulate = [&](const GradedElement& e, const Tridegree& d, const Integer& scale) {
        const PagePiece& piece = ss.piece(tab.page, d);
        if (piece.dim() == 0) return true;
        FpMatrix v = ss.e2_vector(e, d);
        if (!piece.cycles.solve(v)) return false;
        IntMatrix h = tab.homotopy_coordinates(ss, stem, d, piece.coordinates(v));
        for (std::size_t i = 0; i < h.rows(); ++i) out(i, 0) += scale * h(i, 0);
        return true;
    };

    for (auto& [m, c] : img.terms) {
        const Tridegree d = pres.degree(m);
        if (d.stem() != stem) throw UndeterminedDifferential("image leaves stem " + std::to_string(stem));
        if (d.t > tab.t_max) throw UndeterminedDifferential("image above the assembled window at " + d.to_string());
        unsigned v = 0;
        Integer unit = p_valuation(c, p, v);
        if (v >= tab.precision) continue;
        if (accumulate(GradedElement::monomial(m, 1), d, c)) continue;
        leftovers[{d, v}].add_term(m, floor_mod(unit, Integer(p)), pres.ring());
    }
    for (auto& [key, e] : leftovers) {
        if (e.is_zero()) continue;
        if (!accumulate(e, key.first, ipow(Integer(p), key.second)))
            throw UndeterminedDifferential("image at " + key.first.to_string() + " is not a cycle");
    }
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, 0) = floor_mod(out(i, 0), top);
    return out;
}

// target chains x source chains: images of the chain heads of `src` at `stem`.
IntMatrix map_heads(const SpectralSequence& src, const AbutmentTable& src_tab, const SpectralSequence& tgt,
                    const AbutmentTable& tgt_tab, int stem, const Presentation& tgt_z, const MonomialMap& f) {
    const AbutmentEntry& se = src_tab.entries.at(stem);
    const AbutmentEntry& te = tgt_tab.entries.at(stem);
    IntMatrix out(te.chains.size(), se.chains.size());
    for (std::size_t k = 0; k < se.chains.size(); ++k) {
        const Chain& c = se.chains[k];
        const PagePiece& piece = src.piece(src_tab.page, c.head);
        GradedElement img;
        for (std::size_t i = 0; i < piece.dim(); ++i) {
            if (!c.head_vector(i, 0)) continue;
            const GradedElement rep = piece.representative(i);
            for (auto& [m, a] : rep.terms)
                img = add(img, f(m).scaled(Integer(a) * c.head_vector(i, 0), tgt_z.ring()), tgt_z);
        }
        IntMatrix col = homotopy_image(tgt, tgt_tab, stem, img);
        for (std::size_t i = 0; i < col.rows(); ++i) out(i, k) = col(i, 0);
    }
    return out;
}

GradedElement power(const GradedElement& base, int k, const Presentation& pres) {
    GradedElement out = GradedElement::monomial(Monomial::one(pres.alphabet().size()));
    for (int i = 0; i < k; ++i) out = multiply(out, base, pres);
    return out;
}

std::map<int, StemMaps> stem_maps(const SpectralSequence& mss, const AbutmentTable& mtab, const SpectralSequence& pss,
                                  const AbutmentTable& ptab, const FrobeniusData& data) {
    const Presentation tz = integral_copy(pss.e2());
    std::map<int, StemMaps> out;
    MonomialMap can = [&](const Monomial& m) { return apply_can(mss.e2(), tz, m); };
    MonomialMap phi = [&](const Monomial& m) { return apply_phi(mss.e2(), tz, m, data); };
    for (auto& [n, e] : mtab.entries) {
        if (!ptab.entries.count(n)) continue;
        StemMaps s;
        s.source = e.group;
        s.target = ptab.entries.at(n).group;
        s.can = map_heads(mss, mtab, pss, ptab, n, tz, can);
        s.phi = map_heads(mss, mtab, pss, ptab, n, tz, phi);
        out[n] = std::move(s);
    }
    return out;
}

Integer module_order(const FGModule& M) {
    auto o = M.structure().order();
    if (!o) throw CoefficientError("expected a finite module");
    return *o;
}

std::vector<std::string> sorted_markers(const AbelianGroup& g, std::uint32_t p, unsigned M) {
    return group_markers(g, p, M);
}

ExtensionRule ux_rule(std::uint32_t p) { return {{{"u", 1}, {"x", 1}}, p}; }

AbutmentTable reassemble(const XAdicRun& run, unsigned precision) {
    const AbutmentTable& a = run.abutment;
    return assemble_abutment(*run.ss, a.page, a.w, a.entries.begin()->first, a.entries.rbegin()->first, a.t_max,
                             ux_rule(a.p), precision);
}

bool same_markers(const FiberReport& a, const FiberReport& b) {
    if (a.degrees.size() != b.degrees.size()) return false;
    for (auto& [n, d] : a.degrees) {
        auto it = b.degrees.find(n);
        if (it == b.degrees.end() || it->second.markers != d.markers) return false;
    }
    return true;
}

// Forgetful map to the underlying sequence: tau -> 1, rho, theta -> 0.
GradedElement forget(const Presentation& source, const Presentation& target, const Monomial& m) {
    for (const char* g : {"rho", "theta"})
        if (auto i = slot(source, g); i && m[*i] != 0) return {};
    auto t = transport(source, target, m, {"tau", "tau2"});
    if (!t) return {};
    return GradedElement::monomial(*t);
}

IntMatrix solve_transfer(const FGModule& fixed, const FGModule& underlying, const IntMatrix& res) {
    const std::size_t nu = underlying.generators, nf = fixed.generators;
    IntMatrix block = res.hconcat(underlying.relations);
    IntMatrix rhs(nu, nu);
    for (std::size_t i = 0; i < nu; ++i) rhs(i, i) = 2;
    auto sol = integer_solve(block, rhs);
    if (!sol) throw MackeyError("no transfer with res.tr = 2");
    return sol->rows_range(0, nf);
}

MackeyFunctor stem_mackey(const XAdicRun& eq, const XAdicRun& under, int stem) {
    const Presentation uz = integral_copy(under.ss->e2());
    MonomialMap f = [&](const Monomial& m) { return forget(eq.ss->e2(), uz, m); };
    MackeyFunctor M;
    M.fixed = eq.abutment.entries.at(stem).group;
    M.underlying = under.abutment.entries.at(stem).group;
    M.res = map_heads(*eq.ss, eq.abutment, *under.ss, under.abutment, stem, uz, f);
    M.tr = solve_transfer(M.fixed, M.underlying, M.res);
    M.weyl = IntMatrix::identity(M.underlying.generators);
    return M;
}

}  // namespace

GradedElement apply_can(const Presentation& source, const Presentation& target, const Monomial& m) {
    auto t = transport(source, target, m);
    if (!t) return {};
    return GradedElement::monomial(*t);
}

GradedElement apply_phi(const Presentation& source, const Presentation& target, const Monomial& m,
                        const FrobeniusData& data) {
    const Alphabet& ta = target.alphabet();
    const bool cone = source.in_cone(m);
    Monomial base = Monomial::one(ta.size());
    int tau_pairs = 0;
    Integer scale = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const int e = m[i];
        if (e == 0) continue;
        const std::string& name = source.alphabet()[i].name;
        if (name == "x") {
            base[ta.index_of("u")] -= e;
        } else if (name == "u") {
            if (e < 0) throw CoefficientError("phi is defined on the homotopy fixed points only");
            base[ta.index_of("u")] += e;
            scale *= ipow(data.lambda, static_cast<unsigned>(e));
        } else if (name == "tau" && !cone && e > 0) {
            tau_pairs = e / 2;
            base[ta.index_of("tau")] += e % 2;
        } else {
            base[ta.index_of(name)] += e;
        }
    }
    auto nb = target.normalize(base);
    if (!nb) return {};
    GradedElement out = GradedElement::monomial(*nb, scale);
    if (tau_pairs > 0) {
        Monomial t2 = Monomial::one(ta.size());
        t2[ta.index_of("tau")] = 2;
        GradedElement step = GradedElement::monomial(t2);
        if (!data.correction.empty()) step = add(step, GradedElement::monomial(monomial_from(data.correction, ta)), target);
        out = multiply(out, power(step, tau_pairs, target), target);
    }
    return out;
}

std::map<int, StemMaps> can_and_phi(const XAdicRun& minus, const XAdicRun& periodic, const FrobeniusData& data) {
    return stem_maps(*minus.ss, minus.abutment, *periodic.ss, periodic.abutment, data);
}

FiberReport fiber_of(const std::string& name, const std::map<int, StemMaps>& maps, std::uint32_t p, unsigned precision,
                     int lo, int hi) {
    FiberReport r;
    r.name = name;
    r.p = p;
    r.precision = precision;
    r.lo = lo;
    r.hi = hi;
    std::map<int, Subquotient> ker, coker;
    for (auto& [n, s] : maps) {
        ModuleHom f{s.source, s.target, s.can - s.phi};
        if (!f.well_defined()) throw CoefficientError("can - phi is not well defined at stem " + std::to_string(n));
        ker[n] = hom_kernel(f);
        coker[n] = hom_cokernel(f);
        r.kernel[n] = ker[n].module.structure();
        r.cokernel[n] = coker[n].module.structure();
    }
    for (int n = lo; n <= hi; ++n) {
        if (!maps.count(n) || !maps.count(n + 1)) continue;
        FiberDegree d;
        d.degree = n;
        d.kernel = r.kernel[n];
        d.cokernel_next = r.cokernel[n + 1];
        d.group = d.cokernel_next.direct_sum(d.kernel);
        d.extension_ambiguous = !d.kernel.is_trivial() && !d.cokernel_next.is_trivial();
        d.markers = sorted_markers(d.group, p, precision);
        const StemMaps& s = maps.at(n);
        d.rank_identity = module_order(s.source) * module_order(coker[n].module) ==
                          module_order(s.target) * module_order(ker[n].module);
        r.degrees[n] = d;
    }
    r.provenance.push_back("fiber of can - phi with 0 -> coker_{n+1} -> pi_n -> ker_n -> 0");
    return r;
}

std::vector<std::map<std::string, int>> rho_corrections(const XAdicRun& periodic) {
    const SpectralSequence& ss = *periodic.ss;
    const Presentation& pres = ss.e2();
    std::vector<std::map<std::string, int>> out;
    auto rho = slot(pres, "rho");
    auto tau = slot(pres, "tau");
    if (!rho || !tau) return out;
    Monomial t2 = Monomial::one(pres.alphabet().size());
    t2[*tau] = 2;
    const Tridegree d = pres.degree(t2);
    const PagePiece& piece = ss.piece(periodic.abutment.page, d);
    for (auto& m : degree_basis(pres, d)) {
        if (m[*rho] <= 0) continue;
        if (!piece.cycles.solve(ss.e2_vector(GradedElement::monomial(m), d))) continue;
        std::map<std::string, int> c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) c[pres.alphabet()[i].name] = m[i];
        out.push_back(c);
    }
    return out;
}

namespace {

FiberReport fiber_at(const XAdicRun& minus, const XAdicRun& periodic, const FrobeniusData& data, unsigned precision,
                     const std::string& name, int lo, int hi) {
    std::map<int, StemMaps> maps;
    if (precision == minus.abutment.precision) {
        maps = can_and_phi(minus, periodic, data);
    } else {
        AbutmentTable ma = reassemble(minus, precision), pa = reassemble(periodic, precision);
        maps = stem_maps(*minus.ss, ma, *periodic.ss, pa, data);
    }
    return fiber_of(name, maps, data.p, precision, lo, hi);
}

std::string format_correction(const std::map<std::string, int>& c) {
    if (c.empty()) return "0";
    std::string s;
    for (auto& [g, e] : c) s += g + (e == 1 ? "" : "^" + std::to_string(e));
    return s;
}

}  // namespace

TcrReport tcr_f2(const XAdicOptions& opt) {
    TcrReport rep;
    XAdicOptions wide = opt;
    wide.hi = opt.hi + 1;
    const unsigned M = opt.precision ? opt.precision : default_precision();
    wide.precision = M;
    XAdicRun minus = run_x_adic(2, Flavor::HomotopyFixed, wide);
    XAdicRun periodic = run_x_adic(2, Flavor::Tate, wide);

    FrobeniusData data{2, 2, {}};
    rep.fiber = fiber_at(minus, periodic, data, M, "TCR(HF2)", opt.lo, opt.hi);
    FiberReport finer = fiber_at(minus, periodic, data, M + 1, "TCR(HF2)", opt.lo, opt.hi);
    rep.fiber.stabilized = minus.table.stabilized && periodic.table.stabilized && same_markers(rep.fiber, finer);

    rep.corrections_checked.push_back({});
    rep.correction_invariant = true;
    for (auto& c : rho_corrections(periodic)) {
        rep.corrections_checked.push_back(c);
        FiberReport alt = fiber_at(minus, periodic, {2, 2, c}, M, "TCR(HF2)", opt.lo, opt.hi);
        if (!same_markers(rep.fiber, alt)) rep.correction_invariant = false;
        rep.fiber.notes.push_back("phi(tau^2) correction " + format_correction(c) + (same_markers(rep.fiber, alt) ? ": same groups" : ": groups differ"));
    }

    rep.key_differential_derived = minus.derivation && minus.derivation->boundary_nonzero;
    if (minus.derivation) {
        const DifferentialRule asserted = asserted_key_differential(minus.ss->e2());
        bool same = asserted.images == minus.derivation->rule.images;
        SpectralSequence check(minus.ss->e2(), f2_rules(minus.ss->e2(), asserted));
        const int page = minus.ss->last_ruled_page() + 1;
        for (int s = -12; s <= 12 && same; ++s)
            for (int t = 0; t <= 24 && same; ++t)
                same = check.piece(page, {s, t, 0}).dim() == minus.ss->piece(page, {s, t, 0}).dim();
        rep.key_differential_matches_asserted = same;
    }

    // Mackey structure at stem 0 from the underlying sequences.
    XAdicOptions uopt = wide;
    uopt.lo = -1;
    uopt.hi = 1;
    XAdicRun uminus = run_underlying(2, Flavor::HomotopyFixed, uopt);
    XAdicRun uperiodic = run_underlying(2, Flavor::Tate, uopt);
    MackeyFunctor S = stem_mackey(minus, uminus, 0);
    MackeyFunctor T = stem_mackey(periodic, uperiodic, 0);
    auto fixed = can_and_phi(minus, periodic, data).at(0);
    auto under = can_and_phi(uminus, uperiodic, data).at(0);
    MackeyMap f{S, T, fixed.can - fixed.phi, under.can - under.phi};
    auto [K, C] = mackey_kernel_cokernel(f);
    rep.mackey_pi0 = K;
    rep.mackey_pim1 = C;
    rep.fiber.mackey[0] = describe(K);
    rep.fiber.mackey[-1] = describe(C);

    rep.fiber.provenance = minus.table.provenance;
    rep.fiber.provenance.push_back("phi(u) = 2u, phi(x) = u^-1, phi(tau^2) = tau^2 up to rho-corrections");
    rep.fiber.provenance.push_back("fiber of can - phi: TCR^-(HF2) -> TPR(HF2)");
    return rep;
}

OddReport tcr_odd(std::uint32_t p, const XAdicOptions& opt) {
    if (p == 2) throw CoefficientError("tcr_odd needs an odd prime");
    OddReport rep;
    XAdicOptions wide = opt;
    wide.hi = opt.hi + 1;
    const unsigned M = opt.precision ? opt.precision : default_precision();
    wide.precision = M;
    XAdicRun minus = run_x_adic(p, Flavor::HomotopyFixed, wide);
    XAdicRun periodic = run_x_adic(p, Flavor::Tate, wide);
    const std::string name = "TCR(HF" + std::to_string(p) + ")";
    const Integer P = p;
    rep.lambdas = {P, 2 * P, P * (1 + P)};
    rep.lambda_invariant = true;
    for (std::size_t k = 0; k < rep.lambdas.size(); ++k) {
        FrobeniusData data{p, rep.lambdas[k], {}};
        FiberReport f = fiber_at(minus, periodic, data, M, name, opt.lo, opt.hi);
        if (k == 0) {
            FiberReport finer = fiber_at(minus, periodic, data, M + 1, name, opt.lo, opt.hi);
            f.stabilized = minus.table.stabilized && periodic.table.stabilized && same_markers(f, finer);
            rep.fiber = f;
        } else if (!same_markers(rep.fiber, f)) {
            rep.lambda_invariant = false;
        }
    }
    rep.fiber.provenance = minus.table.provenance;
    rep.fiber.provenance.push_back("collapse at E2 by degree: classes at weight 0 sit in stems divisible by 8");
    rep.fiber.provenance.push_back("phi(u) = lambda u with lambda = p * unit, phi(x) = u^-1");
    return rep;
}

}  // namespace rcyclo
