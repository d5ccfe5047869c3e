#include "rcyclo/coeff.hpp"

#include <sstream>

namespace rcyclo {

namespace {

bool maps_equal(const FGModule& target, const IntMatrix& a, const IntMatrix& b) { return target.equal(a, b); }

bool well_defined(const FGModule& src, const FGModule& tgt, const IntMatrix& m) {
    return ModuleHom{src, tgt, m}.well_defined();
}

// Coordinates of each column of `images` with respect to the subquotient generators.
IntMatrix induced(const Subquotient& sub, const FGModule& ambient, const IntMatrix& images, const char* what) {
    IntMatrix out(sub.module.generators, images.cols());
    for (std::size_t j = 0; j < images.cols(); ++j) {
        auto c = express_in(sub, ambient, images.column(j));
        if (!c) throw MackeyError(std::string("induced ") + what + " leaves the kernel");
        for (std::size_t i = 0; i < c->rows(); ++i) out(i, j) = (*c)(i, 0);
    }
    return out;
}

}  // namespace

std::vector<std::string> MackeyFunctor::axiom_failures() const {
    std::vector<std::string> bad;
    const std::size_t nf = fixed.generators, nu = underlying.generators;
    if (res.rows() != nu || res.cols() != nf) bad.push_back("res has the wrong shape");
    if (tr.rows() != nf || tr.cols() != nu) bad.push_back("tr has the wrong shape");
    if (weyl.rows() != nu || weyl.cols() != nu) bad.push_back("weyl has the wrong shape");
    if (!bad.empty()) return bad;
    if (!well_defined(fixed, underlying, res)) bad.push_back("res not well defined");
    if (!well_defined(underlying, fixed, tr)) bad.push_back("tr not well defined");
    if (!well_defined(underlying, underlying, weyl)) bad.push_back("weyl not well defined");
    IntMatrix id = IntMatrix::identity(nu);
    if (!maps_equal(underlying, weyl * weyl, id)) bad.push_back("weyl is not an involution");
    if (!maps_equal(underlying, res * tr, id + weyl)) bad.push_back("res.tr != 1 + weyl");
    if (!maps_equal(fixed, tr * weyl, tr)) bad.push_back("tr.weyl != tr");
    if (!maps_equal(underlying, weyl * res, res)) bad.push_back("weyl.res != res");
    return bad;
}

MackeyFunctor constant_mackey(const AbelianGroup& B) {
    const auto& f = B.factors();
    FGModule M = FGModule::from_orders(f);
    const std::size_t n = f.size();
    IntMatrix two(n, n);
    for (std::size_t i = 0; i < n; ++i) two(i, i) = 2;
    return MackeyFunctor{M, M, IntMatrix::identity(n), two, IntMatrix::identity(n)};
}

std::vector<std::string> MackeyMap::equivariance_failures() const {
    std::vector<std::string> bad;
    if (!well_defined(source.fixed, target.fixed, fixed)) bad.push_back("fixed-level map not well defined");
    if (!well_defined(source.underlying, target.underlying, underlying))
        bad.push_back("underlying-level map not well defined");
    if (!bad.empty()) return bad;
    if (!maps_equal(target.underlying, underlying * source.res, target.res * fixed)) bad.push_back("f does not commute with res");
    if (!maps_equal(target.fixed, fixed * source.tr, target.tr * underlying)) bad.push_back("f does not commute with tr");
    if (!maps_equal(target.underlying, underlying * source.weyl, target.weyl * underlying))
        bad.push_back("f does not commute with weyl");
    return bad;
}

std::pair<MackeyFunctor, MackeyFunctor> mackey_kernel_cokernel(const MackeyMap& f) {
    auto bad = f.equivariance_failures();
    if (!bad.empty()) throw MackeyError("map of Mackey functors rejected: " + bad.front());
    const MackeyFunctor& S = f.source;
    const MackeyFunctor& T = f.target;

    Subquotient kf = hom_kernel({S.fixed, T.fixed, f.fixed});
    Subquotient ku = hom_kernel({S.underlying, T.underlying, f.underlying});
    MackeyFunctor K{kf.module, ku.module,
                    induced(ku, S.underlying, S.res * kf.ambient_generators, "res"),
                    induced(kf, S.fixed, S.tr * ku.ambient_generators, "tr"),
                    induced(ku, S.underlying, S.weyl * ku.ambient_generators, "weyl")};

    Subquotient cf = hom_cokernel({S.fixed, T.fixed, f.fixed});
    Subquotient cu = hom_cokernel({S.underlying, T.underlying, f.underlying});
    MackeyFunctor C{cf.module, cu.module, T.res, T.tr, T.weyl};

    for (auto* M : {&K, &C}) {
        auto fails = M->axiom_failures();
        if (!fails.empty()) throw MackeyError("induced Mackey structure fails: " + fails.front());
    }
    return {K, C};
}

namespace {

std::string classify(const FGModule& src, const FGModule& tgt, const IntMatrix& m) {
    if (src.generators == 0 || tgt.generators == 0) return "0";
    if (m.rows() == m.cols()) {
        for (int k : {1, 2, -1}) {
            IntMatrix s(m.rows(), m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i) s(i, i) = k;
            if (tgt.equal(m, s)) {
                if (k == 1) return "id";
                return "*" + std::to_string(k);
            }
        }
    }
    IntMatrix zero(m.rows(), m.cols());
    if (tgt.equal(m, zero)) return "0";
    return "other";
}

}  // namespace

std::string describe(const MackeyFunctor& M) {
    std::ostringstream os;
    os << "fixed=" << M.fixed.structure().to_string() << " underlying=" << M.underlying.structure().to_string()
       << " res=" << classify(M.fixed, M.underlying, M.res) << " tr=" << classify(M.underlying, M.fixed, M.tr)
       << " weyl=" << classify(M.underlying, M.underlying, M.weyl);
    return os.str();
}

}  // namespace rcyclo
