#pragma once

#include <string>
#include <vector>

#include "rcyclo/gralg.hpp"
#include "rcyclo/linalg.hpp"

namespace rcyclo {

class GroupCohomologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional F_p[C2]-module: the action of the generator sigma.
struct GModule {
    FpMatrix sigma;

    GModule() = default;
    explicit GModule(FpMatrix s);

    std::size_t dim() const { return sigma.rows(); }
    std::uint32_t prime() const { return sigma.prime(); }

    static GModule trivial(std::size_t dim, std::uint32_t p);
    /// F_p[C2]^rank with basis (e_1, sigma e_1, e_2, sigma e_2, ...).
    static GModule free(std::size_t rank, std::uint32_t p);
    /// Degree-t piece of a presentation with an involution (e.g. F2[w1, w2] with the swap).
    static GModule from_involution(const Presentation& pres, const Tridegree& d);
};

struct CohomologyGroup {
    int s = 0;
    std::size_t dim = 0;
    FpMatrix representatives;  // cycles, one column per basis class
    FpMatrix boundaries;       // column basis of the boundary space
};

/// H^s(C2; M) for s in [s_lo, s_hi], s_lo >= 0, from the 2-periodic resolution.
std::vector<CohomologyGroup> c2_cohomology(const GModule& M, int s_lo, int s_hi);
/// Tate cohomology for any s range.
std::vector<CohomologyGroup> c2_tate(const GModule& M, int s_lo, int s_hi);

/// Cochain differential delta^s: C^s -> C^{s+1} of the periodic complex.
FpMatrix periodic_differential(const GModule& M, int s);

/// Coordinates of the class of a cycle with respect to the representatives of H.
FpMatrix class_coordinates(const CohomologyGroup& H, const FpMatrix& cycle);

struct ShortExactSequence {
    GModule A, B, C;
    FpMatrix i;  // B x A
    FpMatrix q;  // C x B
};

/// Checks exactness and equivariance; throws GroupCohomologyError otherwise.
void validate(const ShortExactSequence& ses);

/// Snake-lemma connecting map H^s(C) -> H^{s+1}(A), as a dim H^{s+1}(A) x dim H^s(C) matrix.
/// With tate = true the Tate groups are used (any s).
FpMatrix connecting_map(const ShortExactSequence& ses, int s, bool tate = false);

/// Maps induced on H^s by a module map f: M -> N.
FpMatrix induced_map(const GModule& M, const GModule& N, const FpMatrix& f, int s, bool tate = false);

// ---------------------------------------------------------------------------
// D8 = <sigma, x | sigma^2 = x^4 = 1, sigma x sigma = x^-1>.

struct D8Module {
    std::string name;
    FpMatrix sigma;  // right action
    FpMatrix x;

    std::size_t dim() const { return sigma.rows(); }
    static D8Module trivial();
    static D8Module regular();
    /// F2[D8 / <sigma>], the permutation module on right cosets of <sigma>.
    static D8Module cosets_of_sigma();
    static D8Module by_name(const std::string& name);
};

struct D8Report {
    std::string module;
    int width = 0;
    int height = 0;
    bool relations_hold = false;
    bool d_squared_zero = false;
    bool squares_commute = false;
    std::vector<std::size_t> homology;  // total degrees 0..width+height-2
    std::size_t module_dim = 0;
    bool augmentation_ok = false;
    bool exact = false;
    bool mu2_sigma_x_zero = false;
    bool columns_concentrated = false;

    bool ok() const {
        return relations_hold && d_squared_zero && squares_commute && augmentation_ok && exact && mu2_sigma_x_zero &&
               columns_concentrated;
    }
};

D8Report d8_resolution_check(const D8Module& M, int width, int height);

}  // namespace rcyclo
