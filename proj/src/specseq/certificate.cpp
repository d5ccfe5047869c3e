#include "rcyclo/specseq.hpp"

#include <algorithm>
#include <set>

namespace rcyclo {

namespace {

class Certifier {
public:
    Certifier(const SpectralSequence& ss, int page, const CollapseOptions& opt) : ss_(ss), page_(page), opt_(opt) {
        const Alphabet& a = ss.e2().alphabet();
        for (auto& name : opt.permanent) permanent_.insert(a.index_of(name));
        for (auto& c : opt.composites) composites_.push_back(monomial_from(c, a));
    }

    // d_r into and out of E_page(d) vanish for page <= r <= r_max.
    bool targets_empty(const Tridegree& d) {
        for (int r = page_; r <= opt_.r_max; ++r)
            if (dim(d + differential_shift(r)) != 0) return false;
        return true;
    }

    std::size_t dim(const Tridegree& d) {
        auto it = dims_.find(d);
        if (it != dims_.end()) return it->second;
        std::size_t n = 0;
        try {
            n = ss_.piece(page_, d).dim();
        } catch (const WindowError&) {
            n = static_cast<std::size_t>(-1);
        }
        dims_[d] = n;
        return n;
    }

    // Every class at d is a permanent cycle through page r_max.
    bool certify_degree(const Tridegree& d, std::vector<CollapseEvidence>& ev, std::vector<std::string>& bad) {
        if (dim(d) == 0) return true;
        if (targets_empty(d)) {
            ev.push_back({"E" + std::to_string(page_) + d.to_string(), d, "degree", {}});
            return true;
        }
        const PagePiece& piece = ss_.piece(page_, d);
        bool ok = true;
        std::set<Monomial> seen;
        for (std::size_t k = 0; k < piece.dim(); ++k)
            for (auto& [m, c] : piece.representative(k).terms) {
                if (!seen.insert(m).second) continue;
                if (!certify_monomial(m, ev)) {
                    bad.push_back(format_monomial(m, ss_.e2().alphabet()) + " at " + d.to_string());
                    ok = false;
                }
            }
        return ok;
    }

private:
    const SpectralSequence& ss_;
    int page_;
    const CollapseOptions& opt_;
    std::set<std::size_t> permanent_;
    std::vector<Monomial> composites_;
    std::map<Tridegree, std::size_t> dims_;
    std::map<Monomial, bool> cores_;
    static constexpr int kConeDepth = 8;

    bool is_cycle(const Monomial& m) {
        const Tridegree d = ss_.e2().degree(m);
        try {
            ss_.piece(page_, d).coordinates(ss_.e2_vector(GradedElement::monomial(m), d));
            return true;
        } catch (const UndeterminedDifferential&) {
            return false;
        }
    }

    // A cycle on E_page whose possible targets all vanish.
    bool degree_certified(const Monomial& core) {
        auto it = cores_.find(core);
        if (it != cores_.end()) return it->second;
        bool ok = is_cycle(core) && targets_empty(ss_.e2().degree(core));
        cores_[core] = ok;
        return ok;
    }

    // Permanent factors that could divide m: generator slots with exponent ranges.
    struct Slot {
        std::size_t g;
        int lo, hi;
    };

    std::vector<Slot> factor_slots(const Monomial& m) const {
        const Presentation& pres = ss_.e2();
        const Alphabet& a = pres.alphabet();
        const bool cone = pres.in_cone(m);
        bool dependents_zero = true;
        for (std::size_t g = 0; g < a.size(); ++g)
            if (a[g].kind == ExponentKind::ConeDependent && m[g] != 0) dependents_zero = false;
        std::vector<Slot> slots;
        for (std::size_t g : permanent_) {
            switch (a[g].kind) {
                case ExponentKind::Laurent: slots.push_back({g, std::min(0, m[g]), std::max(0, m[g])}); break;
                case ExponentKind::NonNegative: slots.push_back({g, 0, m[g]}); break;
                case ExponentKind::ConeDependent:
                    slots.push_back({g, 0, cone ? kConeDepth : std::max(0, m[g])});
                    break;
                case ExponentKind::ConeMarker:
                    if (dependents_zero) slots.push_back({g, 0, m[g]});
                    break;
            }
        }
        return slots;
    }

    // m = core * (product of permanent factors) * c^k with core certified by degree.
    bool certify_monomial(const Monomial& m, std::vector<CollapseEvidence>& ev) {
        const Presentation& pres = ss_.e2();
        const Alphabet& a = pres.alphabet();
        const auto slots = factor_slots(m);
        const bool cone = pres.in_cone(m);
        std::vector<int> take(slots.size());
        for (std::size_t k = 0; k < slots.size(); ++k)
            take[k] = slots[k].hi >= 0 && slots[k].lo == 0 ? slots[k].hi : slots[k].lo;
        // Try the full strip first, then every smaller factor.
        std::vector<std::vector<int>> order;
        std::vector<int> cur(slots.size());
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == slots.size()) {
                order.push_back(cur);
                return;
            }
            for (int e = slots[k].lo; e <= slots[k].hi; ++e) {
                cur[k] = e;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        auto first = std::find(order.begin(), order.end(), take);
        if (first != order.end()) std::rotate(order.begin(), first, first + 1);
        for (auto& f : order) {
            Monomial base = m;
            std::vector<std::string> factors;
            for (std::size_t k = 0; k < slots.size(); ++k) {
                if (f[k] == 0) continue;
                base[slots[k].g] -= f[k];
                factors.push_back(a[slots[k].g].name + "^" + std::to_string(f[k]));
            }
            if (try_core(base, factors, cone)) {
                ev.push_back({format_monomial(m, a), pres.degree(m), "leibniz", factors});
                return true;
            }
        }
        return false;
    }

    bool try_core(const Monomial& core, std::vector<std::string>& factors, bool cone) {
        const Presentation& pres = ss_.e2();
        const Alphabet& a = pres.alphabet();
        auto valid = [&](const Monomial& c) {
            auto n = pres.normalize(c);
            return n && *n == c && pres.in_cone(c) == cone;
        };
        if (core.is_one()) return true;
        if (!valid(core)) return false;
        if (degree_certified(core)) {
            factors.push_back(format_monomial(core, a));
            return true;
        }
        for (auto& c : composites_) {
            // core = rest * c^k, k > 0, or k < 0 when c is invertible.
            bool laurent = true;
            for (std::size_t g = 0; g < a.size(); ++g)
                if (c[g] != 0 && a[g].kind != ExponentKind::Laurent) laurent = false;
            if (!degree_certified(c)) continue;
            for (int k = laurent ? -kConeDepth : 1; k <= kConeDepth; ++k) {
                if (k == 0) continue;
                Monomial rest = core;
                for (std::size_t g = 0; g < a.size(); ++g) rest[g] -= k * c[g];
                if (!rest.is_one() && !(valid(rest) && degree_certified(rest))) continue;
                auto n = pres.normalize(Monomial(rest));
                if (!rest.is_one() && !n) continue;
                factors.push_back("(" + format_monomial(c, a) + ")^" + std::to_string(k));
                if (!rest.is_one()) factors.push_back(format_monomial(rest, a));
                return true;
            }
        }
        return false;
    }
};

}  // namespace

CollapseCertificate certify_collapse(const SpectralSequence& ss, const Box& window, const CollapseOptions& opt) {
    CollapseCertificate cert;
    cert.page = ss.last_ruled_page() + 1;
    cert.r_max = opt.r_max;
    cert.w = window.w_lo;
    cert.s_lo = window.s_lo;
    cert.s_hi = window.s_hi;
    cert.t_lo = window.t_lo;
    cert.t_hi = window.t_hi;
    if (opt.r_max < cert.page) {
        cert.complete = true;
        return cert;
    }
    Certifier c(ss, cert.page, opt);
    std::set<Tridegree> done;
    auto visit = [&](const Tridegree& d) {
        if (!done.insert(d).second) return;
        c.certify_degree(d, cert.evidence, cert.undetermined);
    };
    for (int w = window.w_lo; w <= window.w_hi; ++w)
        for (int s = window.s_lo; s <= window.s_hi; ++s)
            for (int t = window.t_lo; t <= window.t_hi; ++t) {
                const Tridegree d{s, t, w};
                visit(d);
                // Classes that could hit d.
                for (int r = cert.page; r <= opt.r_max; ++r) visit(d - differential_shift(r));
            }
    cert.complete = cert.undetermined.empty();
    return cert;
}

CollapseCertificate run_to_collapse(const SpectralSequence& ss, const Box& window, const CollapseOptions& opt) {
    CollapseCertificate cert = certify_collapse(ss, window, opt);
    if (!cert.complete) {
        std::string msg = "collapse not certified at E" + std::to_string(cert.page) + ":";
        for (std::size_t i = 0; i < std::min<std::size_t>(cert.undetermined.size(), 5); ++i)
            msg += " " + cert.undetermined[i];
        throw UndeterminedDifferential(msg);
    }
    return cert;
}

}  // namespace rcyclo
