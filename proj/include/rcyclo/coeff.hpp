#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcyclo/gralg.hpp"

namespace rcyclo {

/// pi_{**}^{C2}(HF2): F2[tau, rho] plus the theta-cone, graded in (s, w) with t = 0.
Presentation hf2_coefficients();
/// F_p[tau^{+-2}] for odd p, with |tau| = (0, -2).
Presentation hfp_odd_coefficients(std::uint32_t p);
/// Polynomial extension of the HF_p presentation by x with |x| = (2, 1).
Presentation thr_coefficients(std::uint32_t p);
/// F2[w1, w2], |wi| = 1 (stored in the t slot), with the swap involution.
Presentation gfp_thr_f2_coefficients();
/// Z[u, x] with u x = 1, a single grading in the t slot: |u| = -2, |x| = 2.
Presentation tp_units_presentation();

enum class Flavor { HomotopyFixed, Tate };

/// E2-term of the x-adic spectral sequence for TCR^- (HomotopyFixed) or TPR (Tate).
Presentation x_adic_e2(std::uint32_t p, Flavor flavor);
/// The underlying non-equivariant E2-term F_p[u, x] (Laurent in u for Tate).
Presentation underlying_e2(std::uint32_t p, Flavor flavor);
/// Looks a presentation up by name: hf2, hfp, thr, gfp, tp_units, hfpss, tss, hfpss_e, tss_e.
Presentation presentation_by_name(const std::string& name, std::uint32_t p = 2);

// ---------------------------------------------------------------------------

struct MackeyFunctor {
    FGModule fixed;       // M(C2/C2)
    FGModule underlying;  // M(C2/e)
    IntMatrix res;        // underlying x fixed
    IntMatrix tr;         // fixed x underlying
    IntMatrix weyl;       // underlying x underlying

    /// Human-readable list of failed axioms; empty when all hold.
    std::vector<std::string> axiom_failures() const;
    bool valid() const { return axiom_failures().empty(); }
};

MackeyFunctor constant_mackey(const AbelianGroup& B);

struct MackeyMap {
    MackeyFunctor source;
    MackeyFunctor target;
    IntMatrix fixed;       // target.fixed x source.fixed
    IntMatrix underlying;  // target.underlying x source.underlying

    std::vector<std::string> equivariance_failures() const;
};

class MackeyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Levelwise kernel and cokernel with the induced structure maps.
std::pair<MackeyFunctor, MackeyFunctor> mackey_kernel_cokernel(const MackeyMap& f);

/// Compact description: fixed/underlying groups and whether res, tr are id, multiplication by k, or other.
std::string describe(const MackeyFunctor& M);

}  // namespace rcyclo
