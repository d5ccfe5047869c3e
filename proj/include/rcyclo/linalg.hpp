#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcyclo {

using Integer = boost::multiprecision::cpp_int;

/// Raised when an exact computation exceeds the coefficient-growth guard.
class CoefficientGrowthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CoefficientError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned kCoefficientBitGuard = 512;

Integer ipow(const Integer& base, unsigned exponent);
Integer floor_mod(const Integer& a, const Integer& n);

// ---------------------------------------------------------------------------
// Dense integer matrices and Smith normal form.

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix column(std::size_t j) const;
    IntMatrix columns(std::size_t first, std::size_t count) const;
    IntMatrix rows_range(std::size_t first, std::size_t count) const;
    /// [this | other]
    IntMatrix hconcat(const IntMatrix& other) const;
    /// [this ; other]
    IntMatrix vconcat(const IntMatrix& other) const;
    IntMatrix reduced_mod(const Integer& modulus) const;
    bool is_zero() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * A * V == D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;

    std::vector<Integer> diagonal() const;
    /// Re-checks the defining identities (unimodularity via determinant +-1).
    bool verify(const IntMatrix& A) const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// When enabled, every Smith form computed is re-verified and counted.
struct SmithAudit {
    std::size_t computed = 0;
    std::size_t failed = 0;
};
void enable_smith_audit(bool on);
SmithAudit smith_audit();

/// Columns spanning the integer kernel of A.
IntMatrix integer_kernel(const IntMatrix& A);

/// Some x with A x == b, if one exists over Z.
std::optional<IntMatrix> integer_solve(const IntMatrix& A, const IntMatrix& b);

Integer determinant(const IntMatrix& A);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups.

/// Invariant-factor description. A factor of 0 denotes a copy of Z.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<Integer> factors);

    static AbelianGroup cyclic(const Integer& order);
    static AbelianGroup free(std::size_t rank);

    const std::vector<Integer>& factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }
    std::size_t free_rank() const;
    std::size_t num_summands() const { return factors_.size(); }
    /// Order, or nullopt when infinite.
    std::optional<Integer> order() const;

    AbelianGroup direct_sum(const AbelianGroup& other) const;

    bool operator==(const AbelianGroup& other) const = default;
    std::string to_string() const;

private:
    std::vector<Integer> factors_;
};

/// Z-module with `generators` generators and relations given by the columns of `relations`.
/// Modules over Z/N are encoded by including N times each basis vector among the relations.
struct FGModule {
    std::size_t generators = 0;
    IntMatrix relations;  // generators x k

    static FGModule free(std::size_t rank);
    static FGModule free_over(std::size_t rank, const Integer& modulus);
    static FGModule from_orders(const std::vector<Integer>& orders);

    AbelianGroup structure() const;
    /// True when column vector v lies in the relation lattice.
    bool is_zero(const IntMatrix& v) const;
    bool equal(const IntMatrix& a, const IntMatrix& b) const;
};

/// A subquotient presentation: the module together with the generator vectors,
/// expressed in the coordinates of an ambient module.
struct Subquotient {
    FGModule module;
    IntMatrix ambient_generators;  // ambient.generators x module.generators
};

/// Homomorphism f: source -> target given by a target.generators x source.generators matrix.
struct ModuleHom {
    FGModule source;
    FGModule target;
    IntMatrix matrix;

    /// Checks that relations map to relations.
    bool well_defined() const;
};

Subquotient hom_kernel(const ModuleHom& f);
Subquotient hom_cokernel(const ModuleHom& f);
Subquotient hom_image(const ModuleHom& f);

/// Expresses v (ambient coordinates) as a combination of sub.ambient_generators
/// modulo the ambient relations. Returns nullopt if v is not in the span.
std::optional<IntMatrix> express_in(const Subquotient& sub, const FGModule& ambient, const IntMatrix& v);

// ---------------------------------------------------------------------------
// Dense matrices over a prime field F_p.

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    static FpMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    FpMatrix operator*(const FpMatrix& other) const;
    FpMatrix operator+(const FpMatrix& other) const;
    FpMatrix operator-(const FpMatrix& other) const;
    bool operator==(const FpMatrix& other) const = default;

    FpMatrix transpose() const;
    FpMatrix hconcat(const FpMatrix& other) const;
    FpMatrix columns(std::size_t first, std::size_t count) const;
    FpMatrix rows_range(std::size_t first, std::size_t count) const;
    bool is_zero() const;

    std::size_t rank() const;
    /// Columns spanning the null space.
    FpMatrix kernel() const;
    /// Some x with A x == b (b a column block), if solvable.
    std::optional<FpMatrix> solve(const FpMatrix& b) const;
    /// Independent columns spanning the column space (a subset of the columns of *this).
    FpMatrix column_basis() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

/// Quotient of the column span of `cycles` by the column span of `boundaries`
/// (which must lie inside it). Returns columns of `cycles`-space completing a basis.
FpMatrix complement_basis(const FpMatrix& cycles, const FpMatrix& boundaries);

}  // namespace rcyclo
