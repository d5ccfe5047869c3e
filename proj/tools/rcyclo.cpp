// rcyclo: command-line front end for the real topological cyclic homology computations.

#include <cstring>
#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "rcyclo/chart.hpp"
#include "rcyclo/io.hpp"

using namespace rcyclo;

namespace {

enum Exit { kOk = 0, kMismatch = 2, kUndetermined = 3, kUnstable = 4, kUsage = 64 };

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    static const std::regex re(R"(\s*(-?\d+)\s*:\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw CLI::ValidationError("expected lo:hi, got " + s);
    Range r{std::stoi(m[1]), std::stoi(m[2])};
    if (r.lo > r.hi) throw CLI::ValidationError("empty range " + s);
    return r;
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) std::cout << dump(j);
    else write_json_file(out, j);
}

int golden_check(const PiTable& t, const std::string& golden) {
    if (golden.empty()) return kOk;
    GoldenDiff d = compare_golden(t, load_json_file(golden));
    for (auto& l : d.lines) std::cerr << l << "\n";
    return d.equal ? kOk : kMismatch;
}

bool any_ambiguous(const FiberReport& r) {
    for (auto& [n, d] : r.degrees)
        if (d.extension_ambiguous) {
            std::cerr << "extension ambiguity at degree " << n << "\n";
            return true;
        }
    return false;
}

int fiber_exit(const FiberReport& r, const std::string& golden) {
    if (int g = golden_check(r.as_table(), golden)) return g;
    if (any_ambiguous(r)) return kUndetermined;
    if (!r.stabilized) return kUnstable;
    return kOk;
}

std::unique_ptr<SpectralSequence> build_sequence(const std::string& which, std::uint32_t p, bool assert_d3) {
    if (which == "hfpss" || which == "tss") {
        Presentation e2 = x_adic_e2(p, which == "tss" ? Flavor::Tate : Flavor::HomotopyFixed);
        std::vector<DifferentialRule> rules;
        if (p == 2)
            rules = f2_rules(e2, assert_d3 ? asserted_key_differential(e2) : derive_key_differential(e2).rule);
        return std::make_unique<SpectralSequence>(e2, rules);
    }
    if (which == "hfpss_e" || which == "tss_e")
        return std::make_unique<SpectralSequence>(underlying_e2(p, which == "tss_e" ? Flavor::Tate : Flavor::HomotopyFixed),
                                                  std::vector<DifferentialRule>{});
    throw CLI::ValidationError("unknown sequence " + which + " (hfpss, tss, hfpss_e, tss_e)");
}

// Allows "--window -12:12": CLI11 would otherwise read "-12:12" as a flag.
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < argc && argv[i + 1][0] == '-' &&
            std::isdigit(static_cast<unsigned char>(argv[i + 1][1]))) {
            out.push_back(a + "=" + argv[++i]);
        } else {
            out.push_back(a);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant trace computations for real topological cyclic homology"};
    app.require_subcommand(1);
    int code = kOk;

    // coeff
    std::string cname = "hf2", sr = "-4:4", tr = "0:4";
    std::uint32_t p = 2;
    int w = 0;
    std::string out;
    auto* coeff = app.add_subcommand("coeff", "degree bases of a coefficient presentation");
    coeff->add_option("--name", cname, "hf2, hfp, thr, gfp, tp_units, hfpss, tss, hfpss_e, tss_e");
    coeff->add_option("--p", p, "prime");
    coeff->add_option("--s", sr, "s range lo:hi");
    coeff->add_option("--t", tr, "t range lo:hi");
    coeff->add_option("--w", w, "weight");
    coeff->add_option("--out", out, "output file");
    coeff->callback([&] {
        Presentation pres = presentation_by_name(cname, p);
        Range S = parse_range(sr), T = parse_range(tr);
        Json j{{"schema", kSchema}, {"kind", "degree_bases"}, {"presentation", pres.name()}, {"ring", pres.ring().name()}};
        Json gens = Json::array();
        for (auto& g : pres.alphabet().generators())
            gens.push_back({{"name", g.name}, {"degree", {g.degree.s, g.degree.t, g.degree.w}}});
        j["generators"] = gens;
        Json pieces = Json::array();
        for (int t = T.lo; t <= T.hi; ++t)
            for (int s = S.lo; s <= S.hi; ++s) {
                auto b = degree_basis(pres, {s, t, w});
                if (b.empty()) continue;
                Json names = Json::array();
                for (auto& m : b) names.push_back(format_monomial(m, pres.alphabet()));
                pieces.push_back({{"s", s}, {"t", t}, {"w", w}, {"basis", names}});
            }
        j["pieces"] = pieces;
        emit(j, out);
    });

    // specseq
    std::string which = "hfpss";
    int page = 4, r_max = 20;
    bool abutment = false, certify = false, assert_d3 = false;
    std::string window = "-12:12", golden;
    unsigned precision = 0;
    auto* spec = app.add_subcommand("specseq", "pages, collapse certificates and abutments of the x-adic sequences");
    spec->add_option("--which", which, "hfpss, tss, hfpss_e, tss_e");
    spec->add_option("--p", p, "prime");
    spec->add_option("--page", page, "page number");
    spec->add_option("--s", sr, "s range for page export");
    spec->add_option("--t", tr, "t range for page export");
    spec->add_option("--w", w, "weight");
    spec->add_flag("--certify", certify, "attach a collapse certificate");
    spec->add_flag("--abutment", abutment, "assemble the abutment table instead of a page");
    spec->add_flag("--assert-d3", assert_d3, "state d3(tau) directly instead of deriving it");
    spec->add_option("--window", window, "abutment stems lo:hi");
    spec->add_option("--r-max", r_max, "largest certified differential");
    spec->add_option("--prec", precision, "precision for open towers");
    spec->add_option("--golden", golden, "golden table to compare against");
    spec->add_option("--out", out, "output file");
    spec->callback([&] {
        if (abutment) {
            Range W = parse_range(window);
            XAdicOptions o;
            o.lo = W.lo;
            o.hi = W.hi;
            o.precision = precision;
            o.r_max = r_max;
            o.derive_key_differential = !assert_d3;
            const bool under = which.size() > 2 && which.substr(which.size() - 2) == "_e";
            const Flavor f = which.rfind("tss", 0) == 0 ? Flavor::Tate : Flavor::HomotopyFixed;
            XAdicRun run = under ? run_underlying(p, f, o) : run_x_adic(p, f, o);
            Json j = to_json(run.table);
            j["certificate"] = to_json(run.certificate);
            emit(j, out);
            code = golden_check(run.table, golden);
            if (!code && !run.table.stabilized) code = kUnstable;
            return;
        }
        auto ss = build_sequence(which, p, assert_d3);
        Range S = parse_range(sr), T = parse_range(tr);
        Box box{S.lo, S.hi, T.lo, T.hi, w, w};
        Json j = to_json(export_page(*ss, page, box));
        if (certify) {
            CollapseOptions o;
            o.r_max = r_max;
            if (ss->e2().alphabet().find("rho")) {
                o.permanent = {"u", "x", "rho", "theta"};
                o.composites = {{{"tau", 2}}};
            } else {
                o.permanent = {"u", "x", "tau2"};
            }
            auto c = certify_collapse(*ss, box, o);
            j["certificate"] = to_json(c);
            if (!c.complete) code = kUndetermined;
        }
        emit(j, out);
    });

    // groupcoh
    int t_deg = 4;
    std::string srange = "0:6";
    bool tate = false;
    auto* gc = app.add_subcommand("groupcoh", "C2 cohomology of the degree-t part of F2[w1, w2] with the swap");
    gc->add_option("--t", t_deg, "internal degree");
    gc->add_option("--s", srange, "cohomological degrees lo:hi");
    gc->add_flag("--tate", tate, "Tate cohomology");
    gc->add_option("--out", out, "output file");
    gc->callback([&] {
        Range S = parse_range(srange);
        if (!tate && S.lo < 0) throw CLI::ValidationError("group cohomology needs s >= 0");
        GModule M = GModule::from_involution(gfp_thr_f2_coefficients(), {0, t_deg, 0});
        auto groups = tate ? c2_tate(M, S.lo, S.hi) : c2_cohomology(M, S.lo, S.hi);
        Json dims = Json::array();
        for (auto& g : groups) dims.push_back({{"s", g.s}, {"dim", g.dim}});
        emit({{"schema", kSchema}, {"kind", "group_cohomology"}, {"t", t_deg}, {"tate", tate}, {"module_dim", M.dim()},
              {"groups", dims}},
             out);
    });

    // witt
    unsigned n_deg = 1, m_prec = 5, samples = 100;
    std::uint64_t seed = 1;
    auto* witt = app.add_subcommand("witt", "Witt vectors of F_{p^n}: representation check and 1 - F");
    witt->add_option("--p", p, "prime");
    witt->add_option("--n", n_deg, "degree of the field");
    witt->add_option("--prec", m_prec, "truncation m");
    witt->add_option("--samples", samples, "random samples for the A/B comparison");
    witt->add_option("--seed", seed, "random seed");
    witt->add_option("--out", out, "output file");
    witt->callback([&] {
        WittRing W(p, n_deg, m_prec);
        std::mt19937_64 rng(seed);
        std::size_t failures = 0;
        for (unsigned k = 0; k < samples; ++k) {
            auto a = W.b_random(rng), b = W.b_random(rng);
            bool ok = W.b_to_a(W.b_add(a, b)) == W.a_add(W.b_to_a(a), W.b_to_a(b)) &&
                      W.b_to_a(W.b_mul(a, b)) == W.a_mul(W.b_to_a(a), W.b_to_a(b)) &&
                      W.b_to_a(W.b_frobenius(a)) == W.a_frobenius(W.b_to_a(a)) && W.a_to_b(W.b_to_a(a)) == a;
            failures += !ok;
        }
        auto g = one_minus_f_groups(W);
        Json mod = Json::array();
        for (auto c : W.field().modulus()) mod.push_back(c);
        emit({{"schema", kSchema},
              {"kind", "witt"},
              {"p", p},
              {"n", n_deg},
              {"m", m_prec},
              {"field_modulus", mod},
              {"samples", samples},
              {"representation_failures", failures},
              {"kernel", to_json(g.kernel)},
              {"cokernel", to_json(g.cokernel)}},
             out);
        if (failures) code = kMismatch;
    });

    // tcr
    auto* tcr = app.add_subcommand("tcr", "TCR(HF_p) as the fiber of can - phi");
    tcr->add_option("--p", p, "prime");
    tcr->add_option("--window", window, "degrees lo:hi");
    tcr->add_option("--prec", precision, "precision for open towers");
    tcr->add_flag("--assert-d3", assert_d3, "state d3(tau) directly instead of deriving it");
    tcr->add_option("--golden", golden, "golden table to compare against");
    tcr->add_option("--out", out, "output file");
    tcr->callback([&] {
        Range W = parse_range(window);
        XAdicOptions o;
        o.lo = W.lo;
        o.hi = W.hi;
        o.precision = precision;
        o.derive_key_differential = !assert_d3;
        if (p == 2) {
            TcrReport r = tcr_f2(o);
            emit(to_json(r), out);
            code = fiber_exit(r.fiber, golden);
        } else {
            OddReport r = tcr_odd(p, o);
            emit(to_json(r), out);
            code = fiber_exit(r.fiber, golden);
        }
    });

    // tcr-perfect
    auto* perf = app.add_subcommand("tcr-perfect", "ker and coker of 1 - F on W(F_{p^n})");
    perf->add_option("--p", p, "prime");
    perf->add_option("--n", n_deg, "degree of the field");
    perf->add_option("--prec", m_prec, "truncation m");
    perf->add_option("--out", out, "output file");
    perf->callback([&] {
        PerfectReport r = tcr_perfect(p, n_deg, m_prec);
        emit(to_json(r), out);
        if (!r.answer.stabilized) code = kUnstable;
    });

    // gfp
    int t_max = 24;
    std::string gwindow = "-10:10";
    auto* gfp = app.add_subcommand("gfp", "geometric fixed points of TCR(HF2) via mu2 fixed points and Tate");
    gfp->add_option("--window", gwindow, "degrees lo:hi");
    gfp->add_option("--t-max", t_max, "truncation of the coefficient degrees");
    gfp->add_option("--golden", golden, "golden table to compare against");
    gfp->add_option("--out", out, "output file");
    gfp->callback([&] {
        Range W = parse_range(gwindow);
        GfpReport r = gfp_tcr_f2({W.lo, W.hi, t_max});
        emit(to_json(r), out);
        code = fiber_exit(r.fiber, golden);
        if (!code && !r.collapse_certified) code = kUndetermined;
    });

    // d8-check
    std::string module = "trivial";
    int width = 12, height = 12;
    auto* d8 = app.add_subcommand("d8-check", "exactness of the D8 bicomplex resolution");
    d8->add_option("--module", module, "trivial, regular, cosets_sigma");
    d8->add_option("--width", width, "columns");
    d8->add_option("--height", height, "rows");
    d8->add_option("--out", out, "output file");
    d8->callback([&] {
        D8Report r = d8_resolution_check(D8Module::by_name(module), width, height);
        emit(to_json(r), out);
        if (!r.ok()) code = kMismatch;
    });

    // chart
    std::string format = "ascii";
    auto* chart = app.add_subcommand("chart", "render a page as ASCII or SVG");
    chart->add_option("--which", which, "hfpss, tss, hfpss_e, tss_e");
    chart->add_option("--p", p, "prime");
    chart->add_option("--page", page, "page number");
    chart->add_option("--s", sr, "s range");
    chart->add_option("--t", tr, "t range");
    chart->add_option("--w", w, "weight");
    chart->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    chart->add_flag("--assert-d3", assert_d3, "state d3(tau) directly instead of deriving it");
    chart->add_option("--out", out, "output file");
    chart->callback([&] {
        auto ss = build_sequence(which, p, assert_d3);
        Range S = parse_range(sr), T = parse_range(tr);
        ChartSpec c = make_chart(*ss, page, {S.lo, S.hi, T.lo, T.hi, w, w});
        const std::string doc = format == "svg" ? render_svg(c) : render_ascii(c);
        if (out.empty()) std::cout << doc;
        else std::ofstream(out) << doc;
    });

    // compare
    std::string actual;
    auto* cmp = app.add_subcommand("compare", "compare a stored table or fiber report with a golden file");
    cmp->add_option("actual", actual, "JSON table or report")->required();
    cmp->add_option("golden", golden, "golden JSON")->required();
    cmp->callback([&] {
        Json a = load_json_file(actual);
        if (a.contains("fiber")) a = a.at("fiber");
        PiTable t = a.at("kind") == "fiber_report" ? fiber_report_from_json(a).as_table() : pi_table_from_json(a);
        code = golden_check(t, golden);
        std::cout << (code == kOk ? "match" : "mismatch") << "\n";
    });

    auto args = normalize_args(argc, argv);
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    } catch (const UndeterminedDifferential& e) {
        std::cerr << "undetermined: " << e.what() << "\n";
        return kUndetermined;
    } catch (const SchemaError& e) {
        std::cerr << "schema: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
