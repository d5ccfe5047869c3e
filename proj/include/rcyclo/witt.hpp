#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rcyclo/coeff.hpp"
#include "rcyclo/linalg.hpp"

namespace rcyclo {

class WittError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// F_q = F_p[X]/(f), elements as coefficient vectors of length n.
class FiniteField {
public:
    using Elem = std::vector<std::int64_t>;

    FiniteField() = default;
    /// f monic of degree n, given by its coefficients c_0..c_n; reducible f is rejected.
    FiniteField(std::uint32_t p, std::vector<std::int64_t> f);

    std::uint32_t p() const { return p_; }
    std::size_t n() const { return modulus_.size() - 1; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    std::uint64_t order() const;

    Elem zero() const { return Elem(n(), 0); }
    Elem one() const;
    Elem generator() const;  // the class of X
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    Elem frobenius(const Elem& a) const { return pow(a, p_); }
    /// a^(p^-k).
    Elem inverse_frobenius(const Elem& a, unsigned k) const;
    Elem from_index(std::uint64_t k) const;
    Elem random(std::mt19937_64& rng) const;

private:
    std::uint32_t p_ = 2;
    std::vector<std::int64_t> modulus_{0, 1};
};

/// Irreducibility over F_p by trial division.
bool is_irreducible(std::uint32_t p, const std::vector<std::int64_t>& f);
/// Smallest monic irreducible of degree n, ordered by the coefficient list c_0, c_1, ...
std::vector<std::int64_t> smallest_irreducible(std::uint32_t p, unsigned n);

/// W_m(F_q) in two representations.
///  A: (Z/p^m)[X]/(f~), Frobenius by the root of f~ lifting X^p.
///  B: Witt coordinates over F_q, arithmetic by ghost components of lifts.
class WittRing {
public:
    using AElem = std::vector<Integer>;
    using BElem = std::vector<FiniteField::Elem>;

    WittRing(std::uint32_t p, unsigned n, unsigned m);

    std::uint32_t p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    const FiniteField& field() const { return field_; }
    Integer modulus() const { return pm_; }
    /// Image of X under Frobenius in representation A.
    const AElem& frobenius_of_x() const { return fx_; }

    AElem a_zero() const { return AElem(n_, 0); }
    AElem a_one() const;
    AElem a_add(const AElem& a, const AElem& b) const;
    AElem a_sub(const AElem& a, const AElem& b) const;
    AElem a_mul(const AElem& a, const AElem& b) const;
    AElem a_pow(const AElem& a, const Integer& e) const;
    AElem a_frobenius(const AElem& a) const;
    AElem a_inverse(const AElem& a) const;
    AElem a_random(std::mt19937_64& rng) const;
    /// Residue mod p.
    FiniteField::Elem a_reduce(const AElem& a) const;
    /// Teichmueller lift of a field element.
    AElem teichmuller(const FiniteField::Elem& a) const;

    BElem b_zero() const { return BElem(m_, field_.zero()); }
    BElem b_one() const;
    BElem b_add(const BElem& a, const BElem& b) const;
    BElem b_mul(const BElem& a, const BElem& b) const;
    BElem b_frobenius(const BElem& a) const;
    BElem b_random(std::mt19937_64& rng) const;

    /// The isomorphism B -> A: sum of p^i Teich(a_i^(p^-i)).
    AElem b_to_a(const BElem& b) const;
    /// Inverse of b_to_a by successive Teichmueller digits.
    BElem a_to_b(const AElem& a) const;

private:
    std::uint32_t p_;
    unsigned n_, m_;
    Integer pm_;
    FiniteField field_;
    std::vector<Integer> lift_;  // f~ coefficients c_0..c_n
    AElem fx_;

    AElem from_field(const FiniteField::Elem& a) const;
    AElem reduce(AElem a) const;
    AElem eval_f(const AElem& r) const;
    AElem eval_df(const AElem& r) const;
    // Combine Witt vectors through ghost components of their lifts.
    BElem ghost_combine(const BElem& a, const BElem& b, bool multiply) const;
};

/// Matrix of 1 - F on the power basis 1, X, ..., X^(n-1) over Z/p^m (entries reduced).
IntMatrix one_minus_f(const WittRing& W);

struct OneMinusFGroups {
    IntMatrix matrix;
    AbelianGroup kernel;
    AbelianGroup cokernel;
    unsigned full_rank = 0;             // summands of order p^m
    std::vector<Integer> torsion;       // other nontrivial summands
};

OneMinusFGroups one_minus_f_groups(const WittRing& W);

struct PerfectFieldAnswer {
    std::uint32_t p = 2;
    unsigned n = 1;
    unsigned m = 1;
    OneMinusFGroups at_m;
    OneMinusFGroups at_m1;
    bool stabilized = false;
    std::string kernel_marker;    // e.g. "Z_2"
    std::string cokernel_marker;
    MackeyFunctor kernel_mackey;  // constant Mackey functors at precision m
    MackeyFunctor cokernel_mackey;
};

/// ker and coker of 1 - F on W_m(F_{p^n}), checked against precision m + 1.
PerfectFieldAnswer tcr_perfect_answer(std::uint32_t p, unsigned n, unsigned m);

}  // namespace rcyclo
