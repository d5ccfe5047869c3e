#include "rcyclo/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

namespace rcyclo {

Integer ipow(const Integer& base, unsigned exponent) {
    Integer result = 1;
    Integer b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

Integer floor_mod(const Integer& a, const Integer& n) {
    if (n == 0) return a;
    Integer r = a % n;
    if (r < 0) r += (n < 0 ? -n : n);
    return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Integer& b = other(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::column(std::size_t j) const { return columns(j, 1); }

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
    IntMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
    IntMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("IntMatrix: row mismatch in hconcat");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("IntMatrix: column mismatch in vconcat");
    IntMatrix out(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = other(i, j);
    return out;
}

IntMatrix IntMatrix::reduced_mod(const Integer& modulus) const {
    IntMatrix out = *this;
    if (modulus == 0) return out;
    for (auto& x : out.data_) x = floor_mod(x, modulus);
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

namespace {

void guard(const Integer& x) {
    if (x != 0 && boost::multiprecision::msb(boost::multiprecision::abs(x)) >= kCoefficientBitGuard)
        throw CoefficientGrowthError("Smith normal form: entry exceeded 512 bits; presentation is likely malformed");
}

struct SmithWork {
    IntMatrix D, U, V;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
    }
    // row_dst += q * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < D.cols(); ++j)
            if (D(src, j) != 0) { D(dst, j) += q * D(src, j); guard(D(dst, j)); }
        for (std::size_t j = 0; j < U.cols(); ++j)
            if (U(src, j) != 0) { U(dst, j) += q * U(src, j); guard(U(dst, j)); }
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < D.rows(); ++i)
            if (D(i, src) != 0) { D(i, dst) += q * D(i, src); guard(D(i, dst)); }
        for (std::size_t i = 0; i < V.rows(); ++i)
            if (V(i, src) != 0) { V(i, dst) += q * V(i, src); guard(V(i, dst)); }
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
    }
};

}  // namespace

static SmithForm smith_unaudited(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithWork w{A, IntMatrix::identity(m), IntMatrix::identity(n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) guard(A(i, j));

    std::size_t t = 0;
    const std::size_t limit = std::min(m, n);
    while (t < limit) {
        // Global pivot choice: smallest nonzero entry of the remaining block.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Integer& x = w.D(i, j);
                if (x == 0) continue;
                Integer ax = boost::multiprecision::abs(x);
                if (!found || ax < best) { found = true; best = ax; pi = i; pj = j; }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.D(i, t) == 0) continue;
                Integer q = w.D(i, t) / w.D(t, t);
                w.add_row(i, t, -q);
                if (w.D(i, t) != 0) { w.swap_rows(i, t); dirty = true; }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.D(t, j) == 0) continue;
                Integer q = w.D(t, j) / w.D(t, t);
                w.add_col(j, t, -q);
                if (w.D(t, j) != 0) { w.swap_cols(j, t); dirty = true; }
            }
            if (dirty) continue;
            // Divisibility: every remaining entry must be a multiple of the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.D(i, j) % w.D(t, t) != 0) {
                        w.add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (w.D(t, t) < 0) w.negate_row(t);
        ++t;
    }
    SmithForm out{std::move(w.U), std::move(w.D), std::move(w.V), t};
    return out;
}

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> d;
    const std::size_t k = std::min(D.rows(), D.cols());
    d.reserve(k);
    for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
    return d;
}

Integer determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && M(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

bool SmithForm::verify(const IntMatrix& A) const {
    if (U * A * V != D) return false;
    for (std::size_t i = 0; i < D.rows(); ++i)
        for (std::size_t j = 0; j < D.cols(); ++j)
            if (i != j && D(i, j) != 0) return false;
    auto d = diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (i + 1 < d.size()) {
            if (d[i] == 0 && d[i + 1] != 0) return false;
            if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
        }
    }
    auto du = boost::multiprecision::abs(determinant(U));
    auto dv = boost::multiprecision::abs(determinant(V));
    return du == 1 && dv == 1;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    const std::size_t n = A.cols();
    return s.V.columns(s.rank, n - s.rank);
}

std::optional<IntMatrix> integer_solve(const IntMatrix& A, const IntMatrix& b) {
    if (b.rows() != A.rows()) throw std::invalid_argument("integer_solve: dimension mismatch");
    if (A.cols() == 0) {
        if (b.is_zero()) return IntMatrix(0, b.cols());
        return std::nullopt;
    }
    SmithForm s = smith_normal_form(A);
    IntMatrix c = s.U * b;
    IntMatrix y(A.cols(), b.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            if (i < s.rank) {
                const Integer& d = s.D(i, i);
                if (c(i, j) % d != 0) return std::nullopt;
                y(i, j) = c(i, j) / d;
            } else if (c(i, j) != 0) {
                return std::nullopt;
            }
        }
    return s.V * y;
}

// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<Integer> factors) {
    std::vector<Integer> torsion;
    std::size_t free = 0;
    for (auto& f : factors) {
        Integer a = boost::multiprecision::abs(f);
        if (a == 1) continue;
        if (a == 0) ++free;
        else torsion.push_back(a);
    }
    // Normalize to invariant factors d_1 | d_2 | ... via the prime-power decomposition
    // implicit in repeated gcd/lcm exchange.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(torsion.begin(), torsion.end());
        for (std::size_t i = 0; i + 1 < torsion.size(); ++i) {
            if (torsion[i + 1] % torsion[i] != 0) {
                Integer g = boost::multiprecision::gcd(torsion[i], torsion[i + 1]);
                Integer l = torsion[i] / g * torsion[i + 1];
                torsion[i] = g;
                torsion[i + 1] = l;
                changed = true;
            }
        }
        torsion.erase(std::remove(torsion.begin(), torsion.end(), Integer(1)), torsion.end());
    }
    factors_ = std::move(torsion);
    for (std::size_t i = 0; i < free; ++i) factors_.push_back(0);
}

AbelianGroup AbelianGroup::cyclic(const Integer& order) { return AbelianGroup({order}); }

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(std::vector<Integer>(rank, 0)); }

std::size_t AbelianGroup::free_rank() const {
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Integer(0)));
}

std::optional<Integer> AbelianGroup::order() const {
    Integer o = 1;
    for (auto& f : factors_) {
        if (f == 0) return std::nullopt;
        o *= f;
    }
    return o;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    std::vector<Integer> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return AbelianGroup(std::move(all));
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " + ";
        if (factors_[i] == 0) os << "Z";
        else os << "Z/" << factors_[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

FGModule FGModule::free(std::size_t rank) { return FGModule{rank, IntMatrix(rank, 0)}; }

FGModule FGModule::free_over(std::size_t rank, const Integer& modulus) {
    if (modulus == 0) return free(rank);
    IntMatrix r(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) r(i, i) = modulus;
    return FGModule{rank, r};
}

FGModule FGModule::from_orders(const std::vector<Integer>& orders) {
    IntMatrix r(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r(i, i) = orders[i];
    return FGModule{orders.size(), r};
}

AbelianGroup FGModule::structure() const {
    if (relations.cols() == 0) return AbelianGroup::free(generators);
    SmithForm s = smith_normal_form(relations);
    std::vector<Integer> f;
    for (std::size_t i = 0; i < generators; ++i) f.push_back(i < s.rank ? s.D(i, i) : Integer(0));
    return AbelianGroup(std::move(f));
}

bool FGModule::is_zero(const IntMatrix& v) const {
    if (v.is_zero()) return true;
    if (relations.cols() == 0) return false;
    return integer_solve(relations, v).has_value();
}

bool FGModule::equal(const IntMatrix& a, const IntMatrix& b) const {
    IntMatrix d = a - b;
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (!is_zero(d.column(j))) return false;
    return true;
}

bool ModuleHom::well_defined() const {
    if (matrix.rows() != target.generators || matrix.cols() != source.generators) return false;
    if (source.relations.cols() == 0) return true;
    IntMatrix img = matrix * source.relations;
    for (std::size_t j = 0; j < img.cols(); ++j)
        if (!target.is_zero(img.column(j))) return false;
    return true;
}

namespace {

// Relations among the columns of G modulo the lattice spanned by R.
IntMatrix relations_among(const IntMatrix& G, const IntMatrix& R) {
    const std::size_t r = G.cols();
    IntMatrix block = G.hconcat(R);
    IntMatrix K = integer_kernel(block);
    return K.rows_range(0, r);
}

}  // namespace

namespace {
std::atomic<bool> audit_on{false};
std::atomic<std::size_t> audit_computed{0}, audit_failed{0};
}  // namespace

void enable_smith_audit(bool on) { audit_on = on; }

SmithAudit smith_audit() { return {audit_computed.load(), audit_failed.load()}; }

SmithForm smith_normal_form(const IntMatrix& A) {
    SmithForm s = smith_unaudited(A);
    if (audit_on) {
        ++audit_computed;
        if (!s.verify(A)) ++audit_failed;
    }
    return s;
}

Subquotient hom_kernel(const ModuleHom& f) {
    const std::size_t m = f.source.generators;
    IntMatrix block = f.matrix.hconcat(f.target.relations);
    IntMatrix K = integer_kernel(block);
    IntMatrix P = K.rows_range(0, m);
    // Drop redundant generators by taking a Z-basis of the column span (Hermite-style via SNF).
    if (P.cols() > 0) {
        SmithForm s = smith_normal_form(P);
        // Columns of P * V corresponding to nonzero diagonal form a basis of the span.
        IntMatrix PV = P * s.V;
        P = PV.columns(0, s.rank);
    }
    // Sign convention: the first nonzero entry of each generator is positive.
    for (std::size_t j = 0; j < P.cols(); ++j) {
        for (std::size_t i = 0; i < P.rows(); ++i) {
            if (P(i, j) == 0) continue;
            if (P(i, j) < 0)
                for (std::size_t k = 0; k < P.rows(); ++k) P(k, j) = -P(k, j);
            break;
        }
    }
    IntMatrix rel = relations_among(P, f.source.relations);
    return Subquotient{FGModule{P.cols(), rel}, P};
}

Subquotient hom_image(const ModuleHom& f) {
    IntMatrix G = f.matrix;
    IntMatrix rel = relations_among(G, f.target.relations);
    return Subquotient{FGModule{G.cols(), rel}, G};
}

Subquotient hom_cokernel(const ModuleHom& f) {
    IntMatrix rel = f.target.relations.hconcat(f.matrix);
    return Subquotient{FGModule{f.target.generators, rel}, IntMatrix::identity(f.target.generators)};
}

std::optional<IntMatrix> express_in(const Subquotient& sub, const FGModule& ambient, const IntMatrix& v) {
    IntMatrix block = sub.ambient_generators.hconcat(ambient.relations);
    auto sol = integer_solve(block, v);
    if (!sol) return std::nullopt;
    return sol->rows_range(0, sub.ambient_generators.cols());
}

}  // namespace rcyclo
