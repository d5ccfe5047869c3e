#include "rcyclo/gralg.hpp"

#include <algorithm>

namespace rcyclo {

Piece make_piece(const Presentation& pres, const Tridegree& d) {
    Piece p;
    p.basis = degree_basis(pres, d);
    const Integer n = pres.ring().modulus();
    const std::size_t k = p.basis.size();
    if (n == 0) {
        p.relations = IntMatrix(k, 0);
    } else {
        p.relations = IntMatrix(k, k);
        for (std::size_t i = 0; i < k; ++i) p.relations(i, i) = n;
    }
    return p;
}

FGModule piece_module(const Piece& piece, const BaseRing&) {
    return FGModule{piece.basis.size(), piece.relations};
}

ModuleWindow::ModuleWindow(Presentation pres, Box box) : pres_(std::move(pres)), box_(box) {
    for (int w = box_.w_lo; w <= box_.w_hi; ++w)
        for (int t = box_.t_lo; t <= box_.t_hi; ++t)
            for (int s = box_.s_lo; s <= box_.s_hi; ++s) {
                Piece p = make_piece(pres_, {s, t, w});
                if (!p.basis.empty()) pieces_.emplace(Tridegree{s, t, w}, std::move(p));
            }
}

Piece ModuleWindow::piece(const Tridegree& d) const {
    if (!box_.contains(d)) throw WindowError("degree " + d.to_string() + " outside window");
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    Piece empty;
    empty.relations = IntMatrix(0, 0);
    return empty;
}

std::size_t ModuleWindow::total_rank() const {
    std::size_t n = 0;
    for (auto& [d, p] : pieces_) n += p.basis.size();
    return n;
}

std::vector<Monomial> degree_basis(const ModuleWindow& window, const Tridegree& d) {
    return window.piece(d).basis;
}

// ---------------------------------------------------------------------------

GradedMap::GradedMap(const Presentation* source, const Presentation* target, Tridegree shift, Kind kind,
                     std::vector<GradedElement> images)
    : source_(source), target_(target), shift_(shift), kind_(kind), images_(std::move(images)) {
    if (images_.size() != source_->alphabet().size())
        throw AlphabetError("graded map needs one image per source generator");
    if (kind_ == Kind::Derivation) {
        if (source_ != target_ && source_->alphabet().size() != target_->alphabet().size())
            throw AlphabetError("derivation must act within one presentation");
        for (std::size_t g = 0; g < images_.size(); ++g) {
            auto d = images_[g].degree(target_->alphabet());
            if (d && *d != source_->alphabet()[g].degree + shift_)
                throw WindowError("rule tridegree mismatch for generator " + source_->alphabet()[g].name);
        }
    }
}

namespace {

using RawTerms = std::map<Monomial, Integer>;

RawTerms raw_product(const RawTerms& a, const RawTerms& b) {
    RawTerms out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out[m] += ca * cb;
        }
    return out;
}

}  // namespace

GradedElement GradedMap::apply(const Monomial& m) const {
    const Presentation& tgt = *target_;
    const BaseRing& ring = tgt.ring();
    GradedElement out;
    if (kind_ == Kind::RingMap) {
        RawTerms acc{{Monomial::one(tgt.alphabet().size()), Integer(1)}};
        for (std::size_t g = 0; g < m.size(); ++g) {
            int e = m[g];
            if (e == 0) continue;
            const GradedElement& img = images_[g];
            if (img.is_zero()) return {};
            RawTerms base(img.terms.begin(), img.terms.end());
            if (e < 0) {
                if (img.terms.size() != 1) throw CoefficientError("cannot invert a non-monomial image");
                Monomial mono = img.terms.begin()->first;
                const Integer& c = img.terms.begin()->second;
                Integer n = ring.modulus();
                Integer inv;
                if (c == 1) inv = 1;
                else if (c == -1) inv = -1;
                else if (n != 0 && boost::multiprecision::gcd(c, n) == 1) {
                    inv = 1;
                    while (floor_mod(inv * c, n) != 1) ++inv;
                } else {
                    throw CoefficientError("image of " + source_->alphabet()[g].name + " is not invertible");
                }
                for (auto& x : mono.exponents) x = -x;
                base = RawTerms{{mono, inv}};
                e = -e;
            }
            for (int k = 0; k < e; ++k) acc = raw_product(acc, base);
        }
        for (auto& [mono, c] : acc) {
            auto n = tgt.normalize(mono);
            if (n) out.add_term(*n, c, ring);
        }
        return out;
    }
    for (std::size_t g = 0; g < m.size(); ++g) {
        const GradedElement& img = images_[g];
        if (img.is_zero()) continue;
        Integer coef = source_->leibniz_coefficient(m, g);
        coef = ring.reduce(coef);
        if (coef == 0) continue;
        for (auto& [mono, c] : img.terms) {
            Monomial raw = m;
            raw[g] -= 1;
            for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += mono[i];
            auto n = tgt.normalize(raw);
            if (n) out.add_term(*n, coef * c, ring);
        }
    }
    return out;
}

GradedElement GradedMap::apply(const GradedElement& e) const {
    GradedElement out;
    for (auto& [m, c] : e.terms) {
        GradedElement im = apply(m);
        for (auto& [mm, cc] : im.terms) out.add_term(mm, c * cc, target_->ring());
    }
    return out;
}

IntMatrix coordinates(const GradedElement& e, const std::vector<Monomial>& basis) {
    IntMatrix v(basis.size(), 1);
    for (auto& [m, c] : e.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || *it != m) throw WindowError("term outside the target basis");
        v(static_cast<std::size_t>(it - basis.begin()), 0) = c;
    }
    return v;
}

IntMatrix GradedMap::matrix_at(const Tridegree& d) const {
    auto src = degree_basis(*source_, d);
    auto tgt = degree_basis(*target_, d + shift_);
    IntMatrix M(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        GradedElement im = apply(src[j]);
        for (auto& [m, c] : im.terms) {
            auto it = std::lower_bound(tgt.begin(), tgt.end(), m);
            if (it == tgt.end() || *it != m)
                throw WindowError("image of " + format_monomial(src[j], source_->alphabet()) +
                                  " is not homogeneous of the declared shift");
            M(static_cast<std::size_t>(it - tgt.begin()), j) = c;
        }
    }
    return M;
}

KernelCokernel kernel_cokernel(const GradedMap& f, const Tridegree& d) {
    if (!(f.source().ring() == f.target().ring()))
        throw CoefficientError("base-ring mismatch: " + f.source().ring().name() + " vs " + f.target().ring().name());
    Piece src = make_piece(f.source(), d);
    Piece tgt = make_piece(f.target(), d + f.shift());
    ModuleHom h{piece_module(src, f.source().ring()), piece_module(tgt, f.target().ring()), f.matrix_at(d)};
    return {hom_kernel(h), hom_cokernel(h)};
}

}  // namespace rcyclo
