#include "rcyclo/linalg.hpp"

#include <sstream>

namespace rcyclo {

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("fp_inverse: zero has no inverse");
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("FpMatrix: dimension mismatch in product");
    FpMatrix out(rows_, other.cols_, p_);
    const std::uint64_t p = p_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                std::uint32_t b = other(k, j);
                if (b) out(i, j) = static_cast<std::uint32_t>((out(i, j) + a * b) % p);
            }
        }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("FpMatrix: dimension mismatch in sum");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + other.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("FpMatrix: dimension mismatch in difference");
    FpMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + p_ - other.data_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

FpMatrix FpMatrix::hconcat(const FpMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("FpMatrix: row mismatch in hconcat");
    FpMatrix out(rows_, cols_ + other.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

FpMatrix FpMatrix::columns(std::size_t first, std::size_t count) const {
    FpMatrix out(rows_, count, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

FpMatrix FpMatrix::rows_range(std::size_t first, std::size_t count) const {
    FpMatrix out(count, cols_, p_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
}

bool FpMatrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(FpMatrix& m) {
    const std::uint32_t p = m.prime();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        std::uint64_t inv = fp_inverse(m(row, col), p);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = static_cast<std::uint32_t>(m(row, j) * inv % p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            std::uint64_t f = p - m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j)) m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(row, j)) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t FpMatrix::rank() const {
    FpMatrix m = *this;
    return rref(m).size();
}

FpMatrix FpMatrix::kernel() const {
    FpMatrix m = *this;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    FpMatrix k(cols_, free_cols.size(), p_);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k(pivots[r], f) = (p_ - m(r, free_cols[f])) % p_;
    }
    return k;
}

std::optional<FpMatrix> FpMatrix::solve(const FpMatrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("FpMatrix::solve: dimension mismatch");
    FpMatrix aug = hconcat(b);
    auto pivots = rref(aug);
    FpMatrix x(cols_, b.cols(), p_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= cols_) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, cols_ + j);
    }
    return x;
}

FpMatrix FpMatrix::column_basis() const {
    FpMatrix m = *this;
    auto pivots = rref(m);
    FpMatrix out(rows_, pivots.size(), p_);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, pivots[k]);
    return out;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

FpMatrix complement_basis(const FpMatrix& cycles, const FpMatrix& boundaries) {
    // Pivot columns of [boundaries | cycles] that fall in the cycles block.
    FpMatrix both = boundaries.hconcat(cycles);
    FpMatrix m = both;
    auto pivots = rref(m);
    std::vector<std::size_t> chosen;
    for (auto c : pivots)
        if (c >= boundaries.cols()) chosen.push_back(c - boundaries.cols());
    FpMatrix out(cycles.rows(), chosen.size(), cycles.prime());
    for (std::size_t k = 0; k < chosen.size(); ++k)
        for (std::size_t i = 0; i < cycles.rows(); ++i) out(i, k) = cycles(i, chosen[k]);
    return out;
}

}  // namespace rcyclo
