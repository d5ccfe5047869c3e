#include <algorithm>
#include <map>
#include <sstream>

#include "rcyclo/chart.hpp"

namespace rcyclo {

char class_glyph(const Presentation& pres, const GradedElement& rep) {
    if (rep.is_zero()) return 'b';
    const Monomial& m = rep.terms.begin()->first;
    if (pres.alphabet().marker() && pres.in_cone(m)) return 'g';
    if (auto rho = pres.alphabet().find("rho"); rho && m[*rho] > 0) return 'r';
    return 'b';
}

ChartSpec make_chart(const SpectralSequence& ss, int page, const Box& window) {
    ChartSpec c;
    const Presentation& pres = ss.e2();
    c.title = pres.name() + " E" + std::to_string(page) + " w=" + std::to_string(window.w_lo);
    c.page = page;
    c.w = window.w_lo;
    c.s_lo = window.s_lo;
    c.s_hi = window.s_hi;
    c.t_lo = window.t_lo;
    c.t_hi = window.t_hi;
    const bool ruled = page <= ss.last_ruled_page();
    for (int t = window.t_lo; t <= window.t_hi; ++t)
        for (int s = window.s_lo; s <= window.s_hi; ++s) {
            const Tridegree d{s, t, c.w};
            const PagePiece& piece = ss.piece(page, d);
            for (std::size_t k = 0; k < piece.dim(); ++k) {
                const GradedElement rep = piece.representative(k);
                c.classes.push_back({s, t, rep.to_string(pres.alphabet()), class_glyph(pres, rep)});
            }
            if (!ruled || piece.dim() == 0) continue;
            const Tridegree to = d + differential_shift(page);
            if (!window.contains({to.s, to.t, window.w_lo})) continue;
            const FpMatrix& dm = ss.differential(page, d);
            for (std::size_t k = 0; k < dm.cols(); ++k) {
                if (dm.columns(k, 1).is_zero()) continue;
                c.arrows.push_back({s, t, to.s, to.t, page, class_glyph(pres, piece.representative(k))});
            }
        }
    return c;
}

namespace {

std::map<std::pair<int, int>, std::string> cells(const ChartSpec& c) {
    std::map<std::pair<int, int>, std::string> out;
    for (auto& k : c.classes) out[{k.s, k.t}] += k.glyph;
    for (auto& [key, s] : out) std::sort(s.begin(), s.end());
    return out;
}

}  // namespace

std::string render_ascii(const ChartSpec& c) {
    std::ostringstream os;
    os << c.title << "\n";
    auto grid = cells(c);
    std::size_t width = 2;
    for (auto& [k, s] : grid) width = std::max(width, s.size() + 1);
    for (int s = c.s_lo; s <= c.s_hi; ++s) width = std::max(width, std::to_string(s).size() + 1);
    auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
    for (int t = c.t_hi; t >= c.t_lo; --t) {
        std::string label = std::to_string(t);
        os << std::string(4 - std::min<std::size_t>(4, label.size()), ' ') << label << " |";
        for (int s = c.s_lo; s <= c.s_hi; ++s) {
            auto it = grid.find({s, t});
            os << pad(it == grid.end() ? "." : it->second);
        }
        os << "\n";
    }
    os << "     +" << std::string(width * static_cast<std::size_t>(std::max(0, c.s_hi - c.s_lo + 1)), '-') << "\n      ";
    for (int s = c.s_lo; s <= c.s_hi; ++s) os << pad(std::to_string(s));
    os << "\n";
    for (auto& a : c.arrows)
        os << "d" << a.r << " (" << a.s << "," << a.t << ") -> (" << a.s_to << "," << a.t_to << ") [" << a.glyph << "]\n";
    os << "classes: " << c.classes.size() << "\n";
    return os.str();
}

std::string render_svg(const ChartSpec& c) {
    const int cell = 24, margin = 40;
    const int cols = std::max(0, c.s_hi - c.s_lo + 1), rows = std::max(0, c.t_hi - c.t_lo + 1);
    const int W = 2 * margin + cols * cell, H = 2 * margin + rows * cell;
    auto x_of = [&](int s) { return margin + (s - c.s_lo) * cell + cell / 2; };
    auto y_of = [&](int t) { return margin + (c.t_hi - t) * cell + cell / 2; };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H << "\">\n"
       << "<style>.b{fill:#000}.g{fill:#1a8a1a}.r{fill:#c01818}"
       << ".ab{stroke:#000}.ag{stroke:#1a8a1a}.ar{stroke:#c01818}line{stroke-width:1.2}text{font:9px sans-serif}</style>\n"
       << "<title>" << c.title << "</title>\n";
    for (int s = c.s_lo; s <= c.s_hi; ++s)
        os << "<text x=\"" << x_of(s) - 4 << "\" y=\"" << H - margin / 2 << "\">" << s << "</text>\n";
    for (int t = c.t_lo; t <= c.t_hi; ++t)
        os << "<text x=\"" << margin / 4 << "\" y=\"" << y_of(t) + 3 << "\">" << t << "</text>\n";
    std::map<std::pair<int, int>, int> seen;
    for (auto& k : c.classes) {
        const int i = seen[{k.s, k.t}]++;
        os << "<circle class=\"" << k.glyph << "\" cx=\"" << x_of(k.s) + 5 * i << "\" cy=\"" << y_of(k.t)
           << "\" r=\"3\"><title>" << k.label << "</title></circle>\n";
    }
    for (auto& a : c.arrows)
        os << "<line class=\"a" << a.glyph << " d" << a.r << "\" x1=\"" << x_of(a.s) << "\" y1=\"" << y_of(a.t)
           << "\" x2=\"" << x_of(a.s_to) << "\" y2=\"" << y_of(a.t_to) << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace rcyclo
