#include "rcyclo/groupcoh.hpp"

#include <algorithm>

namespace rcyclo {

GModule::GModule(FpMatrix s) : sigma(std::move(s)) {
    if (sigma.rows() != sigma.cols()) throw GroupCohomologyError("action matrix must be square");
    if (!(sigma * sigma == FpMatrix::identity(sigma.rows(), sigma.prime())))
        throw GroupCohomologyError("sigma^2 != 1");
}

GModule GModule::trivial(std::size_t dim, std::uint32_t p) { return GModule(FpMatrix::identity(dim, p)); }

GModule GModule::free(std::size_t rank, std::uint32_t p) {
    FpMatrix s(2 * rank, 2 * rank, p);
    for (std::size_t k = 0; k < rank; ++k) {
        s(2 * k, 2 * k + 1) = 1;
        s(2 * k + 1, 2 * k) = 1;
    }
    return GModule(s);
}

GModule GModule::from_involution(const Presentation& pres, const Tridegree& d) {
    if (pres.involution().empty()) throw GroupCohomologyError("presentation has no involution");
    if (pres.ring().kind != BaseRing::Kind::Fp) throw GroupCohomologyError("group cohomology is implemented over F_p only");
    auto basis = degree_basis(pres, d);
    FpMatrix s(basis.size(), basis.size(), pres.ring().p);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Monomial im = pres.apply_involution(basis[j]);
        auto it = std::lower_bound(basis.begin(), basis.end(), im);
        s(static_cast<std::size_t>(it - basis.begin()), j) = 1;
    }
    return GModule(s);
}

FpMatrix periodic_differential(const GModule& M, int s) {
    const std::uint32_t p = M.prime();
    FpMatrix id = FpMatrix::identity(M.dim(), p);
    const bool even = ((s % 2) + 2) % 2 == 0;
    return even ? id - M.sigma : id + M.sigma;
}

namespace {

CohomologyGroup group_at(const GModule& M, int s, bool tate) {
    CohomologyGroup H;
    H.s = s;
    FpMatrix Z = periodic_differential(M, s).kernel();
    if (!tate && s == 0) H.boundaries = FpMatrix(M.dim(), 0, M.prime());
    else H.boundaries = periodic_differential(M, s - 1).column_basis();
    H.representatives = complement_basis(Z, H.boundaries);
    H.dim = H.representatives.cols();
    return H;
}

}  // namespace

std::vector<CohomologyGroup> c2_cohomology(const GModule& M, int s_lo, int s_hi) {
    if (s_lo < 0) throw GroupCohomologyError("group cohomology is concentrated in s >= 0");
    std::vector<CohomologyGroup> out;
    for (int s = s_lo; s <= s_hi; ++s) out.push_back(group_at(M, s, false));
    return out;
}

std::vector<CohomologyGroup> c2_tate(const GModule& M, int s_lo, int s_hi) {
    std::vector<CohomologyGroup> out;
    for (int s = s_lo; s <= s_hi; ++s) out.push_back(group_at(M, s, true));
    return out;
}

FpMatrix class_coordinates(const CohomologyGroup& H, const FpMatrix& cycle) {
    FpMatrix sys = H.representatives.hconcat(H.boundaries);
    auto sol = sys.solve(cycle);
    if (!sol) throw GroupCohomologyError("vector is not a cycle representable in H^" + std::to_string(H.s));
    return sol->rows_range(0, H.dim);
}

void validate(const ShortExactSequence& ses) {
    const auto& [A, B, C, i, q] = ses;
    if (i.rows() != B.dim() || i.cols() != A.dim() || q.rows() != C.dim() || q.cols() != B.dim())
        throw GroupCohomologyError("short exact sequence: shape mismatch");
    if (!(B.sigma * i == i * A.sigma) || !(C.sigma * q == q * B.sigma))
        throw GroupCohomologyError("short exact sequence: maps are not equivariant");
    if (!(q * i).is_zero()) throw GroupCohomologyError("short exact sequence: q.i != 0");
    if (i.rank() != A.dim()) throw GroupCohomologyError("short exact sequence: i is not injective");
    if (q.rank() != C.dim()) throw GroupCohomologyError("short exact sequence: q is not surjective");
    if (A.dim() + C.dim() != B.dim()) throw GroupCohomologyError("short exact sequence: not exact in the middle");
}

FpMatrix connecting_map(const ShortExactSequence& ses, int s, bool tate) {
    validate(ses);
    if (!tate && s < 0) throw GroupCohomologyError("connecting map needs s >= 0");
    CohomologyGroup HC = group_at(ses.C, s, tate);
    CohomologyGroup HA = group_at(ses.A, s + 1, tate);
    FpMatrix out(HA.dim, HC.dim, ses.A.prime());
    FpMatrix delta = periodic_differential(ses.B, s);
    for (std::size_t k = 0; k < HC.dim; ++k) {
        FpMatrix c = HC.representatives.columns(k, 1);
        auto b = ses.q.solve(c);
        if (!b) throw GroupCohomologyError("connecting map: lift failed");
        FpMatrix db = delta * *b;
        auto a = ses.i.solve(db);
        if (!a) throw GroupCohomologyError("connecting map: coboundary not in the image of A");
        FpMatrix coords = class_coordinates(HA, *a);
        for (std::size_t r = 0; r < HA.dim; ++r) out(r, k) = coords(r, 0);
    }
    return out;
}

FpMatrix induced_map(const GModule& M, const GModule& N, const FpMatrix& f, int s, bool tate) {
    if (!(N.sigma * f == f * M.sigma)) throw GroupCohomologyError("induced map: f is not equivariant");
    CohomologyGroup HM = group_at(M, s, tate);
    CohomologyGroup HN = group_at(N, s, tate);
    FpMatrix out(HN.dim, HM.dim, M.prime());
    for (std::size_t k = 0; k < HM.dim; ++k) {
        FpMatrix coords = class_coordinates(HN, f * HM.representatives.columns(k, 1));
        for (std::size_t r = 0; r < HN.dim; ++r) out(r, k) = coords(r, 0);
    }
    return out;
}

}  // namespace rcyclo
