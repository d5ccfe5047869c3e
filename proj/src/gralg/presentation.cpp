#include "rcyclo/gralg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rcyclo {

std::string Tridegree::to_string() const {
    std::ostringstream os;
    os << '(' << s << ',' << t << ',' << w << ')';
    return os.str();
}

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> seen;
    int markers = 0;
    for (auto& g : gens_) {
        if (!seen.insert(g.name).second) throw AlphabetError("duplicate generator name: " + g.name);
        if (g.kind == ExponentKind::ConeMarker) ++markers;
    }
    if (markers > 1) throw AlphabetError("at most one cone marker per alphabet");
}

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

std::size_t Alphabet::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw AlphabetError("unknown generator: " + name);
    return *i;
}

std::optional<std::size_t> Alphabet::marker() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].kind == ExponentKind::ConeMarker) return i;
    return std::nullopt;
}

bool Monomial::is_one() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

Tridegree tridegree(const Monomial& m, const Alphabet& alphabet) {
    if (m.size() != alphabet.size()) throw AlphabetError("monomial length does not match alphabet");
    Tridegree d;
    for (std::size_t i = 0; i < m.size(); ++i) d = d + alphabet[i].degree * m[i];
    return d;
}

Monomial monomial_from(const std::map<std::string, int>& exponents, const Alphabet& alphabet) {
    Monomial m = Monomial::one(alphabet.size());
    for (auto& [name, e] : exponents) m[alphabet.index_of(name)] += e;
    return m;
}

Tridegree tridegree(const std::map<std::string, int>& exponents, const Alphabet& alphabet) {
    return tridegree(monomial_from(exponents, alphabet), alphabet);
}

std::string format_monomial(const Monomial& m, const Alphabet& alphabet) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << '*';
        os << alphabet[i].name;
        if (m[i] != 1) os << '^' << m[i];
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

Integer BaseRing::modulus() const {
    switch (kind) {
        case Kind::Fp: return Integer(p);
        case Kind::ZpM: return ipow(Integer(p), m);
        case Kind::Z: return 0;
    }
    return 0;
}

Integer BaseRing::reduce(const Integer& x) const {
    Integer n = modulus();
    return n == 0 ? x : floor_mod(x, n);
}

std::string BaseRing::name() const {
    switch (kind) {
        case Kind::Fp: return "F" + std::to_string(p);
        case Kind::ZpM: return "Z/" + std::to_string(p) + "^" + std::to_string(m);
        case Kind::Z: return "Z";
    }
    return "?";
}

// ---------------------------------------------------------------------------

Presentation::Presentation(std::string name, Alphabet alphabet, BaseRing ring, std::vector<std::string> rule_names)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), ring_(ring), rules_(std::move(rule_names)) {
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    const std::string prefix = rules::kUnitPairPrefix;
    for (auto& r : rules_) {
        if (r.rfind(prefix, 0) != 0) continue;
        auto body = r.substr(prefix.size());
        auto comma = body.find(',');
        if (comma == std::string::npos) throw AlphabetError("malformed rule: " + r);
        unit_pairs_.emplace_back(alphabet_.index_of(body.substr(0, comma)), alphabet_.index_of(body.substr(comma + 1)));
    }
}

bool Presentation::has_rule(const std::string& rule) const {
    return std::binary_search(rules_.begin(), rules_.end(), rule);
}

void Presentation::set_involution(std::vector<std::size_t> perm) {
    if (perm.size() != alphabet_.size()) throw AlphabetError("involution must permute the whole alphabet");
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || perm[perm[i]] != i) throw AlphabetError("permutation is not an involution");
        if (alphabet_[i].degree != alphabet_[perm[i]].degree) throw AlphabetError("involution must preserve degrees");
    }
    involution_ = std::move(perm);
}

Monomial Presentation::apply_involution(const Monomial& m) const {
    if (involution_.empty()) return m;
    Monomial out = Monomial::one(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[involution_[i]] = m[i];
    return out;
}

bool Presentation::in_cone(const Monomial& m) const {
    auto mk = alphabet_.marker();
    return mk && m[*mk] != 0;
}

bool Presentation::admissible(const Monomial& m) const {
    if (m.size() != alphabet_.size()) return false;
    const bool cone = in_cone(m);
    for (std::size_t i = 0; i < m.size(); ++i) {
        switch (alphabet_[i].kind) {
            case ExponentKind::NonNegative:
                if (m[i] < 0) return false;
                break;
            case ExponentKind::Laurent:
                break;
            case ExponentKind::ConeMarker:
                if (m[i] < 0 || m[i] > 1) return false;
                break;
            case ExponentKind::ConeDependent:
                if (cone ? m[i] > 0 : m[i] < 0) return false;
                break;
        }
    }
    for (auto [a, b] : unit_pairs_)
        if (m[a] > 0 && m[b] > 0) return false;
    return true;
}

std::optional<Monomial> Presentation::normalize(Monomial m) const {
    for (auto [a, b] : unit_pairs_) {
        int k = std::min(m[a], m[b]);
        if (k > 0) {
            m[a] -= k;
            m[b] -= k;
        }
    }
    if (auto mk = alphabet_.marker()) {
        if (m[*mk] > 1 && has_rule(rules::kConeSquareZero)) return std::nullopt;
        if (m[*mk] == 1 && has_rule(rules::kConeTruncation)) {
            for (std::size_t i = 0; i < m.size(); ++i)
                if (alphabet_[i].kind == ExponentKind::ConeDependent && m[i] > 0) return std::nullopt;
        }
    }
    if (!admissible(m)) return std::nullopt;
    return m;
}

int Presentation::leibniz_coefficient(const Monomial& m, std::size_t g) const {
    // In the cone, theta/tau^n behaves as tau^(-n-1) under the module action.
    if (alphabet_[g].kind == ExponentKind::ConeDependent && in_cone(m) && has_rule(rules::kConeLeibnizOffset))
        return m[g] - 1;
    return m[g];
}

// ---------------------------------------------------------------------------

GradedElement GradedElement::monomial(const Monomial& m, const Integer& c) {
    GradedElement e;
    if (c != 0) e.terms[m] = c;
    return e;
}

void GradedElement::add_term(const Monomial& m, const Integer& c, const BaseRing& ring) {
    auto it = terms.find(m);
    Integer v = ring.reduce((it == terms.end() ? Integer(0) : it->second) + c);
    if (v == 0) {
        if (it != terms.end()) terms.erase(it);
    } else if (it == terms.end()) {
        terms.emplace(m, v);
    } else {
        it->second = v;
    }
}

GradedElement GradedElement::scaled(const Integer& c, const BaseRing& ring) const {
    GradedElement out;
    for (auto& [m, a] : terms) out.add_term(m, a * c, ring);
    return out;
}

std::optional<Tridegree> GradedElement::degree(const Alphabet& alphabet) const {
    std::optional<Tridegree> d;
    for (auto& [m, c] : terms) {
        Tridegree dm = tridegree(m, alphabet);
        if (d && *d != dm) throw WindowError("inhomogeneous graded element");
        d = dm;
    }
    return d;
}

std::string GradedElement::to_string(const Alphabet& alphabet) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) os << c;
        else if (c != 1) os << c << '*' << format_monomial(m, alphabet);
        else os << format_monomial(m, alphabet);
    }
    return os.str();
}

GradedElement add(const GradedElement& a, const GradedElement& b, const Presentation& pres) {
    GradedElement out = a;
    for (auto& [m, c] : b.terms) out.add_term(m, c, pres.ring());
    return out;
}

GradedElement multiply(const Monomial& a, const Monomial& b, const Presentation& pres) {
    Monomial raw = a;
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += b[i];
    auto n = pres.normalize(std::move(raw));
    if (!n) return {};
    return GradedElement::monomial(*n, pres.ring().reduce(1));
}

GradedElement multiply(const GradedElement& a, const GradedElement& b, const Presentation& pres) {
    GradedElement out;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            Monomial raw = ma;
            for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += mb[i];
            auto n = pres.normalize(std::move(raw));
            if (n) out.add_term(*n, ca * cb, pres.ring());
        }
    return out;
}

}  // namespace rcyclo
