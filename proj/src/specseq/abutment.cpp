#include "rcyclo/specseq.hpp"

namespace rcyclo {

namespace {

// E_page coordinates of (representative of v) * D at d + |D|.
FpMatrix times_detecting(const SpectralSequence& ss, int page, const Tridegree& d, const FpMatrix& v,
                         const Monomial& D) {
    const Presentation& pres = ss.e2();
    const PagePiece& src = ss.piece(page, d);
    const Tridegree td = d + pres.degree(D);
    const PagePiece& tgt = ss.piece(page, td);
    GradedElement rep;
    for (std::size_t k = 0; k < src.dim(); ++k)
        if (v(k, 0)) rep = add(rep, src.representative(k).scaled(v(k, 0), pres.ring()), pres);
    GradedElement prod = multiply(rep, GradedElement::monomial(D), pres);
    if (tgt.dim() == 0) return FpMatrix(0, 1, pres.ring().p);
    return tgt.coordinates(ss.e2_vector(prod, td));
}

std::string power_label(std::uint32_t p, int k) {
    if (k == 1) return "Z/" + std::to_string(p);
    return "Z/" + std::to_string(p) + "^" + std::to_string(k);
}

}  // namespace

std::vector<std::string> AbutmentEntry::markers(std::uint32_t p) const {
    std::vector<std::string> out;
    for (auto& c : chains) out.push_back(c.open ? "Z_" + std::to_string(p) : power_label(p, c.length));
    return out;
}

AbutmentTable assemble_abutment(const SpectralSequence& ss, int page, int w, int stem_lo, int stem_hi, int t_max,
                                const ExtensionRule& rule, unsigned precision) {
    const Presentation& pres = ss.e2();
    const std::uint32_t p = pres.ring().p;
    if (rule.detects_multiple != p) throw UndeterminedDifferential("extension rules must detect multiplication by p");
    const Monomial D = monomial_from(rule.detecting_class, pres.alphabet());
    const Tridegree shift = pres.degree(D);
    if (shift.stem() != 0 || shift.w != 0 || shift.t <= 0)
        throw UndeterminedDifferential("detecting class must preserve the stem and weight and raise t");

    AbutmentTable table;
    table.p = p;
    table.precision = precision;
    table.w = w;
    table.t_max = t_max;
    table.page = page;

    for (int n = stem_lo; n <= stem_hi; ++n) {
        AbutmentEntry e;
        e.stem = n;
        struct Live {
            std::size_t chain;
            FpMatrix vec;
        };
        std::map<int, std::vector<Live>> incoming;  // continuation vectors keyed by t
        std::vector<Integer> orders;
        for (int t = 0; t <= t_max; ++t) {
            const Tridegree d{n - t, t, w};
            const PagePiece& piece = ss.piece(page, d);
            auto& live = incoming[t];
            if (piece.dim() == 0) continue;
            // Continuing members, dropping zero vectors.
            FpMatrix cols(piece.dim(), 0, p);
            std::vector<Live> kept;
            for (auto& l : live)
                if (!l.vec.is_zero()) {
                    kept.push_back(l);
                    cols = cols.hconcat(l.vec);
                }
            if (cols.cols() > 0 && cols.rank() < cols.cols()) {
                e.associated_graded_only = true;
                e.notes.push_back("members at t=" + std::to_string(t) + " are dependent");
            }
            // New chain heads complement the image.
            FpMatrix heads = complement_basis(FpMatrix::identity(piece.dim(), p), cols.column_basis());
            for (std::size_t k = 0; k < heads.cols(); ++k) {
                Chain c;
                c.head = d;
                c.head_vector = heads.columns(k, 1);
                GradedElement rep;
                for (std::size_t i = 0; i < piece.dim(); ++i)
                    if (c.head_vector(i, 0))
                        rep = add(rep, piece.representative(i).scaled(c.head_vector(i, 0), pres.ring()), pres);
                c.label = rep.to_string(pres.alphabet());
                e.chains.push_back(c);
                kept.push_back({e.chains.size() - 1, c.head_vector});
            }
            FpMatrix mv(piece.dim(), 0, p);
            for (auto& l : kept) {
                Chain& c = e.chains[l.chain];
                e.members[t].push_back({l.chain, c.length});
                mv = mv.hconcat(l.vec);
                ++c.length;
                FpMatrix next = times_detecting(ss, page, d, l.vec, D);
                if (t + shift.t > t_max) {
                    c.open = !next.is_zero();
                } else {
                    incoming[t + shift.t].push_back({l.chain, next});
                }
            }
            e.member_vectors[t] = mv;
        }
        for (auto& c : e.chains) orders.push_back(c.open ? ipow(Integer(p), precision) : ipow(Integer(p), c.length));
        e.group = FGModule::from_orders(orders);
        table.entries[n] = std::move(e);
    }
    return table;
}

IntMatrix AbutmentTable::homotopy_coordinates(const SpectralSequence& ss, int stem, const Tridegree& d,
                                              const FpMatrix& v) const {
    (void)ss;
    const AbutmentEntry& e = entries.at(stem);
    IntMatrix out(e.chains.size(), 1);
    if (v.is_zero()) return out;
    auto it = e.member_vectors.find(d.t);
    if (it == e.member_vectors.end() || d.stem() != stem)
        throw UndeterminedDifferential("class at " + d.to_string() + " is outside the assembled table");
    auto sol = it->second.solve(v);
    if (!sol) throw UndeterminedDifferential("class at " + d.to_string() + " is not spanned by chain members");
    const auto& members = e.members.at(d.t);
    for (std::size_t k = 0; k < members.size(); ++k)
        out(members[k].chain, 0) = Integer((*sol)(k, 0)) * ipow(Integer(p), static_cast<unsigned>(members[k].position));
    return out;
}

}  // namespace rcyclo
