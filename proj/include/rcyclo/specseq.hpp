#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rcyclo/gralg.hpp"
#include "rcyclo/groupcoh.hpp"

namespace rcyclo {

/// (-r, r-1, 0)
inline Tridegree differential_shift(int r) { return {-r, r - 1, 0}; }

struct DifferentialRule {
    int r = 2;
    std::vector<GradedElement> images;  // one per generator; empty means d_r(g) = 0
    std::vector<bool> permanent;        // declared permanent cycles
    std::string provenance;
};

/// All-zero rule on page r.
DifferentialRule zero_rule(const Presentation& pres, int r, const std::string& provenance);

class UndeterminedDifferential : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// E_r piece as a subquotient of the E_2 piece (coordinates in the E_2 monomial basis).
struct PagePiece {
    int r = 2;
    Tridegree degree;
    std::vector<Monomial> e2_basis;
    FpMatrix cycles;
    FpMatrix boundaries;
    FpMatrix representatives;

    std::size_t dim() const { return representatives.cols(); }
    /// E_r coordinates of an E_2 vector that is a cycle.
    FpMatrix coordinates(const FpMatrix& e2_vector) const;
    /// The representative vectors as graded elements.
    GradedElement representative(std::size_t k) const;
};

/// Multiplicative spectral sequence with E_2 given by a presentation over F_p and
/// differentials determined by generator rules through the Leibniz rule.
class SpectralSequence {
public:
    SpectralSequence(Presentation e2, std::vector<DifferentialRule> rules);

    const Presentation& e2() const { return e2_; }
    /// Pages 2..last_ruled_page() have differentials from rules; later pages are uncertified.
    int last_ruled_page() const { return last_ruled_; }
    const std::vector<DifferentialRule>& rules() const { return rules_; }
    std::vector<std::string> provenance() const;

    /// E_r piece; r may exceed the ruled pages by one (E_{last+1}).
    const PagePiece& piece(int r, const Tridegree& d) const;
    /// d_r : E_r(d) -> E_r(d + shift) in representative coordinates.
    const FpMatrix& differential(int r, const Tridegree& d) const;
    /// Leibniz closure of the page-r rule on an E_2 monomial.
    GradedElement leibniz(int r, const Monomial& m) const;
    const GradedMap& leibniz_map(int r) const;
    /// E_2 vector of an element (all terms must be in the E_2 basis at d).
    FpMatrix e2_vector(const GradedElement& e, const Tridegree& d) const;

private:
    Presentation e2_;
    std::vector<DifferentialRule> rules_;
    std::vector<GradedMap> maps_;  // index r - 2
    int last_ruled_ = 1;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, Tridegree>, std::unique_ptr<PagePiece>> pieces_;
    mutable std::map<std::pair<int, Tridegree>, std::unique_ptr<FpMatrix>> diffs_;
    mutable std::map<Tridegree, std::vector<Monomial>> bases_;

    const std::vector<Monomial>& basis(const Tridegree& d) const;
    std::unique_ptr<PagePiece> compute_piece(int r, const Tridegree& d) const;
    std::unique_ptr<FpMatrix> compute_differential(int r, const Tridegree& d) const;
};

/// Homology of a page: a convenience wrapper over SpectralSequence::piece(r + 1, d).
const PagePiece& turn_page(const SpectralSequence& ss, int r, const Tridegree& d);

/// d^2 = 0 at degree d on page r.
bool d_squared_zero(const SpectralSequence& ss, int r, const Tridegree& d);

// ---------------------------------------------------------------------------
// Collapse certificates.

struct CollapseEvidence {
    std::string cls;
    Tridegree degree;
    std::string method;  // "degree" or "leibniz"
    std::vector<std::string> factors;
};

struct CollapseCertificate {
    int page = 2;  // E_page = E_infinity inside the window
    int r_max = 20;
    int w = 0;
    int s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0;
    bool complete = false;
    std::vector<CollapseEvidence> evidence;
    std::vector<std::string> undetermined;
};

struct CollapseOptions {
    int r_max = 20;
    /// Generators declared permanent (names); Laurent ones count in both directions.
    std::vector<std::string> permanent;
    /// Composite ring generators certified by degree, e.g. tau^2.
    std::vector<std::map<std::string, int>> composites;
};

/// Certifies that all d_r, page <= r <= r_max, vanish on the classes of the window box
/// (fixed w) and on every class that could hit it.
CollapseCertificate certify_collapse(const SpectralSequence& ss, const Box& window, const CollapseOptions& opt);

/// Certificate plus the page at which it holds; throws UndeterminedDifferential on failure.
CollapseCertificate run_to_collapse(const SpectralSequence& ss, const Box& window, const CollapseOptions& opt);

// ---------------------------------------------------------------------------
// Abutment.

struct ExtensionRule {
    std::map<std::string, int> detecting_class;  // e.g. u x
    std::uint32_t detects_multiple = 2;          // multiplication by this integer
};

struct Chain {
    Tridegree head;
    FpMatrix head_vector;  // E_inf coordinates at head
    int length = 0;        // number of nonzero members inside the window
    bool open = false;     // still nonzero at the window edge
    std::string label;
};

struct ChainMember {
    std::size_t chain = 0;
    int position = 0;
};

struct AbutmentEntry {
    int stem = 0;
    std::vector<Chain> chains;
    std::map<int, std::vector<ChainMember>> members;  // keyed by t
    std::map<int, FpMatrix> member_vectors;           // E_inf coordinates, one column per member
    FGModule group;  // over Z/p^M: open chains get order p^M
    bool associated_graded_only = false;
    std::vector<std::string> notes;

    std::vector<std::string> markers(std::uint32_t p) const;
};

struct AbutmentTable {
    std::uint32_t p = 2;
    unsigned precision = 8;
    int w = 0;
    int t_max = 0;
    int page = 4;
    std::map<int, AbutmentEntry> entries;

    /// Homotopy coordinates (one per chain) of an E_inf class at degree d with E_inf coordinates v.
    IntMatrix homotopy_coordinates(const SpectralSequence& ss, int stem, const Tridegree& d, const FpMatrix& v) const;
};

AbutmentTable assemble_abutment(const SpectralSequence& ss, int page, int w, int stem_lo, int stem_hi, int t_max,
                                const ExtensionRule& rule, unsigned precision);

// ---------------------------------------------------------------------------
// The key differential, derived from the snake-lemma computation.

struct KeyDifferentialDerivation {
    bool boundary_nonzero = false;     // d(x2bar) != 0 from the connecting map
    FpMatrix connecting_matrix;
    std::size_t tau_target_dim = 0;    // E_2 piece at |tau| + shift_3
    std::size_t tau_x_target_dim = 0;  // E_2 piece at |tau x| + shift_3
    std::string tau_target;            // the unique basis monomial
    std::string tau_x_target;
    DifferentialRule rule;             // the resulting d_3 rule
};

/// Derives d_3(tau) for p = 2 from groupcoh.connecting_map plus target uniqueness.
KeyDifferentialDerivation derive_key_differential(const Presentation& e2);
/// The same rule stated directly.
DifferentialRule asserted_key_differential(const Presentation& e2);
/// Zero d_3 on all generators except tau, permanence of u, x, rho, theta.
std::vector<DifferentialRule> f2_rules(const Presentation& e2, const DifferentialRule& d3);

}  // namespace rcyclo
