#include <cstdlib>

#include "rcyclo/pipelines.hpp"

namespace rcyclo {

unsigned default_precision() {
    if (const char* env = std::getenv("RCYCLO_PRECISION")) {
        const int v = std::atoi(env);
        if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
    }
    return 8;
}

std::vector<std::string> group_markers(const AbelianGroup& g, std::uint32_t p, unsigned precision) {
    std::vector<std::string> out;
    const Integer full = ipow(Integer(p), precision);
    for (auto& f : g.factors()) {
        if (f == 0) out.push_back("Z");
        else if (f == full) out.push_back("Z_" + std::to_string(p));
        else {
            unsigned k = 0;
            Integer r = f;
            while (r % p == 0) {
                r /= p;
                ++k;
            }
            if (r != 1) out.push_back("Z/" + f.str());
            else out.push_back(k == 1 ? "Z/" + std::to_string(p) : "Z/" + std::to_string(p) + "^" + std::to_string(k));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PiTable FiberReport::as_table() const {
    PiTable t;
    t.name = name;
    t.p = p;
    t.precision = precision;
    t.lo = lo;
    t.hi = hi;
    t.stabilized = stabilized;
    t.provenance = provenance;
    for (auto& [n, d] : degrees) {
        PiEntry e;
        e.degree = n;
        e.group = d.group;
        e.markers = d.markers;
        e.associated_graded_only = d.extension_ambiguous;
        t.entries[n] = e;
    }
    return t;
}

namespace {

ExtensionRule ux_detects_p(std::uint32_t p) { return {{{"u", 1}, {"x", 1}}, p}; }

PiTable table_from(const std::string& name, const AbutmentTable& ab, const std::vector<std::string>& provenance) {
    PiTable t;
    t.name = name;
    t.p = ab.p;
    t.precision = ab.precision;
    t.provenance = provenance;
    bool first = true;
    for (auto& [n, e] : ab.entries) {
        if (first) t.lo = n;
        first = false;
        t.hi = n;
        PiEntry pe;
        pe.degree = n;
        pe.group = e.group.structure();
        pe.markers = e.markers(ab.p);
        std::sort(pe.markers.begin(), pe.markers.end());
        for (auto& c : e.chains) pe.classes.push_back(c.label);
        pe.associated_graded_only = e.associated_graded_only;
        pe.notes = e.notes;
        t.entries[n] = pe;
    }
    return t;
}

XAdicRun finish_run(XAdicRun run, const XAdicOptions& opt, int t_max, const std::string& name,
                    const CollapseOptions& copt) {
    const unsigned M = opt.precision ? opt.precision : default_precision();
    const std::uint32_t p = run.ss->e2().ring().p;
    const int page = run.ss->last_ruled_page() + 1;
    Box box{opt.lo - t_max, opt.hi, 0, t_max, 0, 0};
    run.certificate = run_to_collapse(*run.ss, box, copt);
    run.abutment = assemble_abutment(*run.ss, page, 0, opt.lo, opt.hi, t_max, ux_detects_p(p), M);
    std::vector<std::string> prov = run.ss->provenance();
    prov.push_back("collapse certified at E" + std::to_string(run.certificate.page) + " for r <= " +
                   std::to_string(run.certificate.r_max));
    prov.push_back("extension rule: u*x detects " + std::to_string(p));
    run.table = table_from(name, run.abutment, prov);
    // Markers must not change when the t-window grows.
    AbutmentTable wider = assemble_abutment(*run.ss, page, 0, opt.lo, opt.hi, t_max + 4, ux_detects_p(p), M);
    run.table.stabilized = true;
    for (auto& [n, e] : run.abutment.entries) {
        auto a = e.markers(p), b = wider.entries.at(n).markers(p);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) run.table.stabilized = false;
    }
    return run;
}

int resolve_t_max(const XAdicOptions& opt) {
    return opt.t_max >= 0 ? opt.t_max : 2 * std::max(std::abs(opt.lo), std::abs(opt.hi)) + 4;
}

}  // namespace

XAdicRun run_x_adic(std::uint32_t p, Flavor flavor, const XAdicOptions& opt) {
    XAdicRun run;
    Presentation e2 = x_adic_e2(p, flavor);
    std::vector<DifferentialRule> rules;
    CollapseOptions copt;
    copt.r_max = opt.r_max;
    if (p == 2) {
        if (opt.derive_key_differential) {
            run.derivation = derive_key_differential(e2);
            rules = f2_rules(e2, run.derivation->rule);
        } else {
            rules = f2_rules(e2, asserted_key_differential(e2));
        }
        copt.permanent = {"u", "x", "rho", "theta"};
        copt.composites = {{{"tau", 2}}};
    } else {
        copt.permanent = {"u", "x", "tau2"};
    }
    run.ss = std::make_unique<SpectralSequence>(e2, rules);
    const std::string name = std::string(flavor == Flavor::Tate ? "TPR" : "TCR-") + "(HF" + std::to_string(p) + ")";
    return finish_run(std::move(run), opt, resolve_t_max(opt), name, copt);
}

XAdicRun run_underlying(std::uint32_t p, Flavor flavor, const XAdicOptions& opt) {
    XAdicRun run;
    run.ss = std::make_unique<SpectralSequence>(underlying_e2(p, flavor), std::vector<DifferentialRule>{});
    CollapseOptions copt;
    copt.r_max = opt.r_max;
    copt.permanent = {"u", "x"};
    const std::string name = std::string(flavor == Flavor::Tate ? "TP" : "TC-") + "(HF" + std::to_string(p) + ")";
    return finish_run(std::move(run), opt, resolve_t_max(opt), name, copt);
}

PiTable tcr_minus_f2(const XAdicOptions& opt) { return run_x_adic(2, Flavor::HomotopyFixed, opt).table; }
PiTable tpr_f2(const XAdicOptions& opt) { return run_x_adic(2, Flavor::Tate, opt).table; }

}  // namespace rcyclo
