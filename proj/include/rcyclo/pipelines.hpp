#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcyclo/coeff.hpp"
#include "rcyclo/specseq.hpp"
#include "rcyclo/witt.hpp"

namespace rcyclo {

/// Default precision M for open towers (Z/p^M standing in for Z_p); RCYCLO_PRECISION overrides.
unsigned default_precision();

struct PiEntry {
    int degree = 0;
    AbelianGroup group;
    std::vector<std::string> markers;  // "Z_2", "Z/2", "Z/2^3", ...
    std::vector<std::string> classes;  // detecting E_inf classes, when known
    bool associated_graded_only = false;
    std::vector<std::string> notes;
};

struct PiTable {
    std::string name;
    std::uint32_t p = 2;
    unsigned precision = 8;
    int lo = 0, hi = 0;
    bool stabilized = false;
    std::map<int, PiEntry> entries;
    std::vector<std::string> provenance;
};

struct FiberDegree {
    int degree = 0;
    AbelianGroup kernel;        // ker f at this degree
    AbelianGroup cokernel_next; // coker f at degree + 1
    AbelianGroup group;         // the fiber's pi
    std::vector<std::string> markers;
    bool extension_ambiguous = false;
    bool rank_identity = true;  // |A| / |B| = |ker| / |coker| at this degree
};

struct FiberReport {
    std::string name;
    std::uint32_t p = 2;
    unsigned precision = 8;
    int lo = 0, hi = 0;
    bool stabilized = false;
    std::map<int, AbelianGroup> kernel;
    std::map<int, AbelianGroup> cokernel;
    std::map<int, FiberDegree> degrees;
    std::map<int, std::string> mackey;  // describe() of the Mackey functor at a degree
    std::vector<std::string> provenance;
    std::vector<std::string> notes;

    PiTable as_table() const;
};

/// Markers for an abelian group; factors equal to p^precision become "Z_p".
std::vector<std::string> group_markers(const AbelianGroup& g, std::uint32_t p, unsigned precision);

// ---------------------------------------------------------------------------
// x-adic spectral sequences.

struct XAdicOptions {
    int lo = -12, hi = 12;   // abutment stems
    int t_max = -1;          // default 2 * max(|lo|, |hi|) + 4
    unsigned precision = 0;  // 0: default_precision()
    bool derive_key_differential = true;
    int r_max = 20;
};

struct XAdicRun {
    std::unique_ptr<SpectralSequence> ss;
    std::optional<KeyDifferentialDerivation> derivation;
    CollapseCertificate certificate;
    AbutmentTable abutment;
    PiTable table;
};

/// TCR^-(HF_p) (HomotopyFixed) or TPR(HF_p) (Tate) at weight 0.
XAdicRun run_x_adic(std::uint32_t p, Flavor flavor, const XAdicOptions& opt);
/// The underlying TC^-(HF_p) or TP(HF_p).
XAdicRun run_underlying(std::uint32_t p, Flavor flavor, const XAdicOptions& opt);

PiTable tcr_minus_f2(const XAdicOptions& opt);
PiTable tpr_f2(const XAdicOptions& opt);

/// Image of a monomial under can or phi as an E_2 element of the Tate sequence.
struct FrobeniusData {
    std::uint32_t p = 2;
    Integer lambda = 2;                      // phi(u) = lambda u
    std::map<std::string, int> correction;   // phi(tau^2) = tau^2 + correction; empty = none
};

GradedElement apply_can(const Presentation& source, const Presentation& target, const Monomial& m);
GradedElement apply_phi(const Presentation& source, const Presentation& target, const Monomial& m,
                        const FrobeniusData& data);

/// Per-stem maps on the assembled groups: target chains x source chains.
struct StemMaps {
    IntMatrix can;
    IntMatrix phi;
    FGModule source;
    FGModule target;
};

std::map<int, StemMaps> can_and_phi(const XAdicRun& minus, const XAdicRun& periodic, const FrobeniusData& data);

/// ker/coker of can - phi and the fiber sequence 0 -> coker_{n+1} -> pi_n -> ker_n -> 0.
FiberReport fiber_of(const std::string& name, const std::map<int, StemMaps>& maps, std::uint32_t p,
                     unsigned precision, int lo, int hi);

/// Candidate rho-corrections of phi(tau^2) that are permanent cycles of the Tate sequence.
std::vector<std::map<std::string, int>> rho_corrections(const XAdicRun& periodic);

struct TcrReport {
    FiberReport fiber;
    std::vector<std::map<std::string, int>> corrections_checked;
    bool correction_invariant = false;
    MackeyFunctor mackey_pi0;
    MackeyFunctor mackey_pim1;
    bool key_differential_derived = false;
    bool key_differential_matches_asserted = false;
};

TcrReport tcr_f2(const XAdicOptions& opt);

struct OddReport {
    FiberReport fiber;
    std::vector<Integer> lambdas;
    bool lambda_invariant = false;
};

OddReport tcr_odd(std::uint32_t p, const XAdicOptions& opt);

// ---------------------------------------------------------------------------
// Geometric fixed points via the mu2 homotopy fixed points and Tate construction.

struct GfpOptions {
    int lo = -10, hi = 10;
    int t_max = 24;  // truncation of pi_t THR^{phi C2}
};

struct GfpReport {
    FiberReport fiber;
    std::map<int, std::size_t> hfp_dims;   // pi_n of the homotopy fixed points (truncated)
    std::map<int, std::size_t> tate_dims;
    bool swap_invariant = false;
    bool collapse_certified = false;
    std::vector<std::string> certificate;
    std::map<int, std::size_t> expected_dims;  // F2[tau^2] + Sigma^-1 F2[tau^2]
};

GfpReport gfp_tcr_f2(const GfpOptions& opt);

// ---------------------------------------------------------------------------

struct PerfectReport {
    PerfectFieldAnswer answer;
    std::string mackey_pi0;
    std::string mackey_pim1;
};

PerfectReport tcr_perfect(std::uint32_t p, unsigned n, unsigned m);

}  // namespace rcyclo
