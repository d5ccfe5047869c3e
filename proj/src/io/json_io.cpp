#include <fstream>
#include <sstream>

#include "rcyclo/io.hpp"

namespace rcyclo {

namespace {

Json header(const char* kind) { return Json{{"schema", kSchema}, {"kind", kind}}; }

void expect(const Json& j, const char* kind) {
    if (!j.is_object() || !j.contains("schema") || j.at("schema") != kSchema)
        throw SchemaError(std::string("expected schema ") + kSchema);
    if (j.at("kind") != kind)
        throw SchemaError(std::string("expected kind ") + kind + ", got " + j.at("kind").get<std::string>());
}

Json int_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Json to_json(const AbelianGroup& g) {
    Json f = Json::array();
    for (auto& x : g.factors()) f.push_back(x.str());
    return {{"factors", f}, {"text", g.to_string()}};
}

AbelianGroup abelian_group_from_json(const Json& j) {
    std::vector<Integer> f;
    for (auto& x : j.at("factors")) f.emplace_back(x.get<std::string>());
    return AbelianGroup(f);
}

Json to_json(const PiTable& t) {
    Json j = header("pi_table");
    j["name"] = t.name;
    j["p"] = t.p;
    j["precision"] = t.precision;
    j["window"] = {t.lo, t.hi};
    j["stabilized"] = t.stabilized;
    j["provenance"] = t.provenance;
    Json entries = Json::array();
    for (auto& [n, e] : t.entries) {
        entries.push_back({{"degree", n},
                           {"group", to_json(e.group)},
                           {"markers", e.markers},
                           {"classes", e.classes},
                           {"associated_graded_only", e.associated_graded_only},
                           {"notes", e.notes}});
    }
    j["entries"] = entries;
    return j;
}

PiTable pi_table_from_json(const Json& j) {
    expect(j, "pi_table");
    PiTable t;
    t.name = j.at("name");
    t.p = j.at("p");
    t.precision = j.at("precision");
    t.lo = j.at("window").at(0);
    t.hi = j.at("window").at(1);
    t.stabilized = j.at("stabilized");
    t.provenance = j.at("provenance").get<std::vector<std::string>>();
    for (auto& e : j.at("entries")) {
        PiEntry pe;
        pe.degree = e.at("degree");
        pe.group = abelian_group_from_json(e.at("group"));
        pe.markers = e.at("markers").get<std::vector<std::string>>();
        pe.classes = e.at("classes").get<std::vector<std::string>>();
        pe.associated_graded_only = e.at("associated_graded_only");
        pe.notes = e.at("notes").get<std::vector<std::string>>();
        t.entries[pe.degree] = pe;
    }
    return t;
}

Json to_json(const FiberReport& r) {
    Json j = header("fiber_report");
    j["name"] = r.name;
    j["p"] = r.p;
    j["precision"] = r.precision;
    j["window"] = {r.lo, r.hi};
    j["stabilized"] = r.stabilized;
    j["provenance"] = r.provenance;
    j["notes"] = r.notes;
    Json ker = Json::array(), coker = Json::array(), degs = Json::array(), mackey = Json::array();
    for (auto& [n, g] : r.kernel) ker.push_back({{"degree", n}, {"group", to_json(g)}});
    for (auto& [n, g] : r.cokernel) coker.push_back({{"degree", n}, {"group", to_json(g)}});
    for (auto& [n, d] : r.degrees)
        degs.push_back({{"degree", n},
                        {"kernel", to_json(d.kernel)},
                        {"cokernel_next", to_json(d.cokernel_next)},
                        {"group", to_json(d.group)},
                        {"markers", d.markers},
                        {"extension_ambiguous", d.extension_ambiguous},
                        {"rank_identity", d.rank_identity}});
    for (auto& [n, s] : r.mackey) mackey.push_back({{"degree", n}, {"description", s}});
    j["kernel"] = ker;
    j["cokernel"] = coker;
    j["degrees"] = degs;
    j["mackey"] = mackey;
    return j;
}

FiberReport fiber_report_from_json(const Json& j) {
    expect(j, "fiber_report");
    FiberReport r;
    r.name = j.at("name");
    r.p = j.at("p");
    r.precision = j.at("precision");
    r.lo = j.at("window").at(0);
    r.hi = j.at("window").at(1);
    r.stabilized = j.at("stabilized");
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (auto& e : j.at("kernel")) r.kernel[e.at("degree")] = abelian_group_from_json(e.at("group"));
    for (auto& e : j.at("cokernel")) r.cokernel[e.at("degree")] = abelian_group_from_json(e.at("group"));
    for (auto& e : j.at("degrees")) {
        FiberDegree d;
        d.degree = e.at("degree");
        d.kernel = abelian_group_from_json(e.at("kernel"));
        d.cokernel_next = abelian_group_from_json(e.at("cokernel_next"));
        d.group = abelian_group_from_json(e.at("group"));
        d.markers = e.at("markers").get<std::vector<std::string>>();
        d.extension_ambiguous = e.at("extension_ambiguous");
        d.rank_identity = e.at("rank_identity");
        r.degrees[d.degree] = d;
    }
    for (auto& e : j.at("mackey")) r.mackey[e.at("degree")] = e.at("description").get<std::string>();
    return r;
}

PageExport export_page(const SpectralSequence& ss, int page, const Box& window) {
    PageExport e;
    e.presentation = ss.e2().name();
    e.p = ss.e2().ring().p;
    e.page = page;
    e.w = window.w_lo;
    e.s_lo = window.s_lo;
    e.s_hi = window.s_hi;
    e.t_lo = window.t_lo;
    e.t_hi = window.t_hi;
    for (int t = window.t_lo; t <= window.t_hi; ++t)
        for (int s = window.s_lo; s <= window.s_hi; ++s) {
            const PagePiece& piece = ss.piece(page, {s, t, e.w});
            if (piece.dim() == 0) continue;
            PageExport::Entry en{s, t, {}};
            for (std::size_t k = 0; k < piece.dim(); ++k)
                en.classes.push_back(piece.representative(k).to_string(ss.e2().alphabet()));
            e.pieces.push_back(en);
        }
    return e;
}

Json to_json(const PageExport& e) {
    Json j = header("page");
    j["presentation"] = e.presentation;
    j["p"] = e.p;
    j["page"] = e.page;
    j["w"] = e.w;
    j["window"] = {{"s", {e.s_lo, e.s_hi}}, {"t", {e.t_lo, e.t_hi}}};
    Json pieces = Json::array();
    for (auto& en : e.pieces) pieces.push_back({{"s", en.s}, {"t", en.t}, {"classes", en.classes}});
    j["pieces"] = pieces;
    return j;
}

PageExport page_from_json(const Json& j) {
    expect(j, "page");
    PageExport e;
    e.presentation = j.at("presentation");
    e.p = j.at("p");
    e.page = j.at("page");
    e.w = j.at("w");
    e.s_lo = j.at("window").at("s").at(0);
    e.s_hi = j.at("window").at("s").at(1);
    e.t_lo = j.at("window").at("t").at(0);
    e.t_hi = j.at("window").at("t").at(1);
    for (auto& p : j.at("pieces"))
        e.pieces.push_back({p.at("s"), p.at("t"), p.at("classes").get<std::vector<std::string>>()});
    return e;
}

Json to_json(const CollapseCertificate& c) {
    Json j = header("collapse_certificate");
    j["page"] = c.page;
    j["r_max"] = c.r_max;
    j["w"] = c.w;
    j["window"] = {{"s", {c.s_lo, c.s_hi}}, {"t", {c.t_lo, c.t_hi}}};
    j["complete"] = c.complete;
    j["undetermined"] = c.undetermined;
    std::size_t by_degree = 0;
    for (auto& e : c.evidence) by_degree += e.method == "degree";
    j["classes_by_degree"] = by_degree;
    j["classes_by_leibniz"] = c.evidence.size() - by_degree;
    return j;
}

Json to_json(const MackeyFunctor& M) {
    return {{"fixed", to_json(M.fixed.structure())},
            {"underlying", to_json(M.underlying.structure())},
            {"res", int_matrix(M.res)},
            {"tr", int_matrix(M.tr)},
            {"weyl", int_matrix(M.weyl)},
            {"description", describe(M)},
            {"axioms_hold", M.valid()}};
}

Json to_json(const TcrReport& r) {
    Json j = header("tcr_report");
    j["fiber"] = to_json(r.fiber);
    Json corr = Json::array();
    for (auto& c : r.corrections_checked) corr.push_back(c);
    j["corrections_checked"] = corr;
    j["correction_invariant"] = r.correction_invariant;
    j["mackey_pi0"] = to_json(r.mackey_pi0);
    j["mackey_pi_minus1"] = to_json(r.mackey_pim1);
    j["key_differential_derived"] = r.key_differential_derived;
    j["key_differential_matches_asserted"] = r.key_differential_matches_asserted;
    return j;
}

Json to_json(const OddReport& r) {
    Json j = header("tcr_odd_report");
    j["fiber"] = to_json(r.fiber);
    Json l = Json::array();
    for (auto& x : r.lambdas) l.push_back(x.str());
    j["lambdas"] = l;
    j["lambda_invariant"] = r.lambda_invariant;
    return j;
}

Json to_json(const GfpReport& r) {
    Json j = header("gfp_report");
    j["fiber"] = to_json(r.fiber);
    Json h = Json::array(), t = Json::array(), e = Json::array();
    for (auto& [n, d] : r.hfp_dims) h.push_back({{"degree", n}, {"dim", d}});
    for (auto& [n, d] : r.tate_dims) t.push_back({{"degree", n}, {"dim", d}});
    for (auto& [n, d] : r.expected_dims) e.push_back({{"degree", n}, {"dim", d}});
    j["hfp_dims"] = h;
    j["tate_dims"] = t;
    j["expected_dims"] = e;
    j["swap_invariant"] = r.swap_invariant;
    j["collapse_certified"] = r.collapse_certified;
    j["certificate"] = r.certificate;
    return j;
}

Json to_json(const PerfectReport& r) {
    Json j = header("perfect_report");
    const auto& a = r.answer;
    j["p"] = a.p;
    j["n"] = a.n;
    j["m"] = a.m;
    j["kernel"] = to_json(a.at_m.kernel);
    j["cokernel"] = to_json(a.at_m.cokernel);
    j["kernel_next_precision"] = to_json(a.at_m1.kernel);
    j["cokernel_next_precision"] = to_json(a.at_m1.cokernel);
    j["stabilized"] = a.stabilized;
    j["kernel_marker"] = a.kernel_marker;
    j["cokernel_marker"] = a.cokernel_marker;
    j["mackey_pi0"] = r.mackey_pi0;
    j["mackey_pi_minus1"] = r.mackey_pim1;
    return j;
}

Json to_json(const D8Report& r) {
    Json j = header("d8_report");
    j["module"] = r.module;
    j["width"] = r.width;
    j["height"] = r.height;
    j["module_dim"] = r.module_dim;
    j["homology"] = r.homology;
    j["relations_hold"] = r.relations_hold;
    j["d_squared_zero"] = r.d_squared_zero;
    j["squares_commute"] = r.squares_commute;
    j["augmentation_ok"] = r.augmentation_ok;
    j["exact"] = r.exact;
    j["mu2_sigma_x_zero"] = r.mu2_sigma_x_zero;
    j["columns_concentrated"] = r.columns_concentrated;
    j["ok"] = r.ok();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << dump(j);
}

GoldenDiff compare_golden(const PiTable& actual, const Json& golden) {
    if (!golden.is_object() || !golden.contains("schema") || golden.at("schema") != kSchema)
        throw SchemaError(std::string("golden file is not schema ") + kSchema);
    const std::string kind = golden.at("kind");
    PiTable g;
    if (kind == "pi_table") g = pi_table_from_json(golden);
    else if (kind == "fiber_report") g = fiber_report_from_json(golden).as_table();
    else if (golden.contains("fiber")) g = fiber_report_from_json(golden.at("fiber")).as_table();
    else throw SchemaError("golden kind " + kind + " cannot be compared with a table");

    GoldenDiff d;
    auto fmt = [](const std::vector<std::string>& m) {
        if (m.empty()) return std::string("0");
        std::string s;
        for (auto& x : m) s += (s.empty() ? "" : " + ") + x;
        return s;
    };
    const int lo = std::min(actual.lo, g.lo), hi = std::max(actual.hi, g.hi);
    for (int n = lo; n <= hi; ++n) {
        const auto a = actual.entries.find(n);
        const auto b = g.entries.find(n);
        const bool in_a = n >= actual.lo && n <= actual.hi, in_b = n >= g.lo && n <= g.hi;
        if (!in_a || !in_b) continue;
        const std::vector<std::string> none;
        const auto& ma = a == actual.entries.end() ? none : a->second.markers;
        const auto& mb = b == g.entries.end() ? none : b->second.markers;
        if (ma != mb) {
            d.equal = false;
            if (!d.first_mismatch) d.first_mismatch = n;
            d.lines.push_back("degree " + std::to_string(n) + ": expected " + fmt(mb) + ", got " + fmt(ma));
        }
    }
    return d;
}

}  // namespace rcyclo
