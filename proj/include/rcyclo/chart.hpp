#pragma once

#include <string>
#include <vector>

#include "rcyclo/specseq.hpp"

namespace rcyclo {

/// Class taxonomy letters: b (tower classes), g (cone classes), r (rho-torsion classes).
char class_glyph(const Presentation& pres, const GradedElement& rep);

struct ChartClass {
    int s = 0, t = 0;
    std::string label;
    char glyph = 'b';
};

struct ChartArrow {
    int s = 0, t = 0;          // source
    int s_to = 0, t_to = 0;    // target
    int r = 2;
    char glyph = 'b';          // colour of the source
};

struct ChartSpec {
    std::string title;
    int page = 2;
    int w = 0;
    int s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0;
    std::vector<ChartClass> classes;
    std::vector<ChartArrow> arrows;
};

/// Classes of E_page in the window (w = window.w_lo) and the d_page arrows between them.
ChartSpec make_chart(const SpectralSequence& ss, int page, const Box& window);

std::string render_ascii(const ChartSpec& chart);
std::string render_svg(const ChartSpec& chart);

}  // namespace rcyclo
