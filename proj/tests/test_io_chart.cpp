#include "doctest.h"
#include "rcyclo/chart.hpp"
#include "rcyclo/io.hpp"

using namespace rcyclo;

namespace {

SpectralSequence hfpss() {
    Presentation e2 = x_adic_e2(2, Flavor::HomotopyFixed);
    return SpectralSequence(e2, f2_rules(e2, asserted_key_differential(e2)));
}

std::size_t window_dim(const SpectralSequence& ss, int page, const Box& b) {
    std::size_t n = 0;
    for (int s = b.s_lo; s <= b.s_hi; ++s)
        for (int t = b.t_lo; t <= b.t_hi; ++t) n += ss.piece(page, {s, t, b.w_lo}).dim();
    return n;
}

}  // namespace

TEST_CASE("table round trip is byte stable") {
    XAdicOptions o;
    o.lo = -6;
    o.hi = 6;
    PiTable t = tcr_minus_f2(o);
    Json j = to_json(t);
    CHECK(j.at("schema") == kSchema);
    CHECK(dump(to_json(pi_table_from_json(j))) == dump(j));
}

TEST_CASE("fiber report and page round trips") {
    GfpReport r = gfp_tcr_f2({-2, 4, 12});
    Json j = to_json(r.fiber);
    CHECK(dump(to_json(fiber_report_from_json(j))) == dump(j));
    SpectralSequence ss = hfpss();
    PageExport e = export_page(ss, 4, {-6, 2, 0, 6, 0, 0});
    PageExport back = page_from_json(to_json(e));
    CHECK(back == e);
    CHECK(dump(to_json(back)) == dump(to_json(e)));
}

TEST_CASE("schema drift is rejected") {
    Json j = to_json(PiTable{});
    j["schema"] = "rcyclo/0";
    CHECK_THROWS_AS(pi_table_from_json(j), SchemaError);
    CHECK_THROWS_AS(compare_golden(PiTable{}, j), SchemaError);
    Json k = to_json(PiTable{});
    CHECK_THROWS_AS(fiber_report_from_json(k), SchemaError);
}

TEST_CASE("golden comparison localizes the first mismatch") {
    XAdicOptions o;
    o.lo = -4;
    o.hi = 4;
    PiTable t = tcr_minus_f2(o);
    Json golden = to_json(t);
    CHECK(compare_golden(t, golden).equal);
    for (auto& e : golden["entries"])
        if (e["degree"] == 1) e["markers"] = {"Z/2", "Z/2"};
    GoldenDiff d = compare_golden(t, golden);
    CHECK_FALSE(d.equal);
    REQUIRE(d.first_mismatch);
    CHECK(*d.first_mismatch == 1);
    CHECK(d.lines.size() == 1);
}

TEST_CASE("charts") {
    SpectralSequence ss = hfpss();
    Box tiny{-2, 0, 0, 2, 0, 0};
    ChartSpec c2 = make_chart(ss, 2, tiny);
    bool unit = false;
    for (auto& k : c2.classes) unit = unit || (k.s == 0 && k.t == 0 && k.label == "1" && k.glyph == 'b');
    CHECK(unit);
    CHECK(render_ascii(c2).find('b') != std::string::npos);

    Box box{-10, 2, 0, 8, 0, 0};
    ChartSpec c3 = make_chart(ss, 3, box);
    CHECK(c3.classes.size() == window_dim(ss, 3, box));
    REQUIRE_FALSE(c3.arrows.empty());
    for (auto& a : c3.arrows) {
        CHECK(a.s_to - a.s == -3);
        CHECK(a.t_to - a.t == 2);
    }
    std::string svg = render_svg(c3);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(render_svg(c3) == svg);

    Presentation te = x_adic_e2(2, Flavor::Tate);
    SpectralSequence tss(te, f2_rules(te, asserted_key_differential(te)));
    ChartSpec c4 = make_chart(tss, 4, box);
    bool red_on_zero_line = false;
    for (auto& k : c4.classes)
        if (k.glyph == 'r') {
            CHECK(k.t == 0);
            red_on_zero_line = true;
        }
    CHECK(red_on_zero_line);

    ChartSpec empty = make_chart(ss, 2, {5, 4, 0, 0, 0, 0});
    CHECK(empty.classes.empty());
    CHECK_NOTHROW(render_svg(empty));
}
