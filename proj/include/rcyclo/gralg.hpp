#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcyclo/linalg.hpp"

namespace rcyclo {

/// (s, t, w) with t the printed row of the charts, so |x| = (0, 2, 1).
struct Tridegree {
    int s = 0;
    int t = 0;
    int w = 0;

    Tridegree operator+(const Tridegree& o) const { return {s + o.s, t + o.t, w + o.w}; }
    Tridegree operator-(const Tridegree& o) const { return {s - o.s, t - o.t, w - o.w}; }
    Tridegree operator*(int k) const { return {k * s, k * t, k * w}; }
    auto operator<=>(const Tridegree&) const = default;

    /// Abutment stem s + t.
    int stem() const { return s + t; }
    std::string to_string() const;
};

class AlphabetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExponentKind {
    NonNegative,
    Laurent,
    ConeMarker,     // exponent 0 or 1
    ConeDependent,  // >= 0 without the marker, <= 0 with it
};

struct Generator {
    std::string name;
    Tridegree degree;
    ExponentKind kind = ExponentKind::NonNegative;
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t index_of(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;
    std::optional<std::size_t> marker() const;

private:
    std::vector<Generator> gens_;
};

struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

    int operator[](std::size_t i) const { return exponents[i]; }
    int& operator[](std::size_t i) { return exponents[i]; }
    std::size_t size() const { return exponents.size(); }
    bool is_one() const;

    auto operator<=>(const Monomial&) const = default;
};

Tridegree tridegree(const Monomial& m, const Alphabet& alphabet);
/// Named form; unknown names raise AlphabetError.
Tridegree tridegree(const std::map<std::string, int>& exponents, const Alphabet& alphabet);
Monomial monomial_from(const std::map<std::string, int>& exponents, const Alphabet& alphabet);
std::string format_monomial(const Monomial& m, const Alphabet& alphabet);

struct BaseRing {
    enum class Kind { Fp, ZpM, Z };
    Kind kind = Kind::Z;
    std::uint32_t p = 0;
    unsigned m = 0;

    static BaseRing fp(std::uint32_t p) { return {Kind::Fp, p, 1}; }
    static BaseRing zpm(std::uint32_t p, unsigned m) { return {Kind::ZpM, p, m}; }
    static BaseRing integers() { return {Kind::Z, 0, 0}; }

    /// 0 for Z.
    Integer modulus() const;
    Integer reduce(const Integer& x) const;
    std::string name() const;
    bool operator==(const BaseRing&) const = default;
};

/// Rule-table entries recognized by Presentation::normalize and the Leibniz closure.
namespace rules {
inline constexpr const char* kConeSquareZero = "cone_square_zero";
inline constexpr const char* kConeTruncation = "cone_truncation";
inline constexpr const char* kConeLeibnizOffset = "cone_leibniz_offset";
inline constexpr const char* kUnitPairPrefix = "unit_pair:";  // unit_pair:u,x
}  // namespace rules

class Presentation {
public:
    Presentation() = default;
    Presentation(std::string name, Alphabet alphabet, BaseRing ring, std::vector<std::string> rule_names);

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const BaseRing& ring() const { return ring_; }
    const std::vector<std::string>& rule_names() const { return rules_; }
    bool has_rule(const std::string& rule) const;

    /// Optional generator permutation (e.g. the swap of w1, w2).
    const std::vector<std::size_t>& involution() const { return involution_; }
    void set_involution(std::vector<std::size_t> perm);
    Monomial apply_involution(const Monomial& m) const;

    /// Free-form metadata (spectrum, fixed-point flavour, parameters).
    std::map<std::string, std::string> metadata;

    bool admissible(const Monomial& m) const;
    /// Applies the rule table to a raw exponent vector; nullopt means the product vanishes.
    std::optional<Monomial> normalize(Monomial m) const;
    /// Coefficient of the generator slot g in the Leibniz expansion of m.
    int leibniz_coefficient(const Monomial& m, std::size_t g) const;
    bool in_cone(const Monomial& m) const;

    Tridegree degree(const Monomial& m) const { return tridegree(m, alphabet_); }

private:
    std::string name_;
    Alphabet alphabet_;
    BaseRing ring_;
    std::vector<std::string> rules_;
    std::vector<std::pair<std::size_t, std::size_t>> unit_pairs_;
    std::vector<std::size_t> involution_;
};

/// Homogeneous-by-convention sum of monomials with coefficients in the base ring.
struct GradedElement {
    std::map<Monomial, Integer> terms;

    static GradedElement monomial(const Monomial& m, const Integer& c = 1);
    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Integer& c, const BaseRing& ring);
    GradedElement scaled(const Integer& c, const BaseRing& ring) const;
    /// Tridegree of a nonzero element; throws if terms disagree.
    std::optional<Tridegree> degree(const Alphabet& alphabet) const;
    bool operator==(const GradedElement&) const = default;
    std::string to_string(const Alphabet& alphabet) const;
};

GradedElement add(const GradedElement& a, const GradedElement& b, const Presentation& pres);
GradedElement multiply(const GradedElement& a, const GradedElement& b, const Presentation& pres);
GradedElement multiply(const Monomial& a, const Monomial& b, const Presentation& pres);

/// Deterministic (lexicographic) list of admissible normalized monomials of tridegree d.
/// Raises WindowError if the degree slice of the admissibility region is unbounded.
std::vector<Monomial> degree_basis(const Presentation& pres, const Tridegree& d);

struct Box {
    int s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0, w_lo = 0, w_hi = 0;
    bool contains(const Tridegree& d) const {
        return d.s >= s_lo && d.s <= s_hi && d.t >= t_lo && d.t <= t_hi && d.w >= w_lo && d.w <= w_hi;
    }
};

struct Piece {
    std::vector<Monomial> basis;
    IntMatrix relations;  // basis.size() x k, Smith form
};

/// Finite map from tridegrees in a box to presented pieces.
class ModuleWindow {
public:
    ModuleWindow() = default;
    ModuleWindow(Presentation pres, Box box);

    const Presentation& presentation() const { return pres_; }
    const Box& box() const { return box_; }
    const std::map<Tridegree, Piece>& pieces() const { return pieces_; }
    /// Empty pieces are omitted from the map; this returns them anyway.
    Piece piece(const Tridegree& d) const;
    std::size_t total_rank() const;

private:
    Presentation pres_;
    Box box_;
    std::map<Tridegree, Piece> pieces_;
};

std::vector<Monomial> degree_basis(const ModuleWindow& window, const Tridegree& d);
Piece make_piece(const Presentation& pres, const Tridegree& d);
FGModule piece_module(const Piece& piece, const BaseRing& ring);

/// Map determined by generator images, either as a ring map or as a derivation.
class GradedMap {
public:
    enum class Kind { RingMap, Derivation };

    GradedMap() = default;
    GradedMap(const Presentation* source, const Presentation* target, Tridegree shift, Kind kind,
              std::vector<GradedElement> images);

    const Presentation& source() const { return *source_; }
    const Presentation& target() const { return *target_; }
    const Tridegree& shift() const { return shift_; }
    Kind kind() const { return kind_; }
    const std::vector<GradedElement>& images() const { return images_; }

    GradedElement apply(const Monomial& m) const;
    GradedElement apply(const GradedElement& e) const;
    /// target basis at d+shift by source basis at d.
    IntMatrix matrix_at(const Tridegree& d) const;

private:
    const Presentation* source_ = nullptr;
    const Presentation* target_ = nullptr;
    Tridegree shift_;
    Kind kind_ = Kind::RingMap;
    std::vector<GradedElement> images_;
};

/// Coordinates of e in the given basis; terms outside the basis raise.
IntMatrix coordinates(const GradedElement& e, const std::vector<Monomial>& basis);

struct KernelCokernel {
    Subquotient kernel;
    Subquotient cokernel;
};

KernelCokernel kernel_cokernel(const GradedMap& f, const Tridegree& d);

}  // namespace rcyclo
