#include "mimo/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "mimo/op_count.hpp"

namespace mimo {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw DimensionError("from_rows: ragged row lengths");
        std::size_t c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix ComplexMatrix::conj_transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r) t(c, r) = std::conj((*this)(r, c));
    return t;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionError("block: range exceeds matrix bounds");
    ComplexMatrix b(nr, nc);
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t r = 0; r < nr; ++r) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw DimensionError("set_block: range exceeds matrix bounds");
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t r = 0; r < b.rows(); ++r) (*this)(r0 + r, c0 + c) = b(r, c);
}

void ComplexMatrix::append_cols(const ComplexMatrix& right) {
    if (cols_ == 0 && rows_ == 0) {
        *this = right;
        return;
    }
    if (right.rows() != rows_) throw DimensionError("append_cols: row counts differ");
    data_.insert(data_.end(), right.data_.begin(), right.data_.end());
    cols_ += right.cols_;
}

void ComplexMatrix::erase_cols(std::size_t first, std::size_t count) {
    if (first + count > cols_) throw DimensionError("erase_cols: range exceeds column count");
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(first * rows_),
                data_.begin() + static_cast<std::ptrdiff_t>((first + count) * rows_));
    cols_ -= count;
}

bool ComplexMatrix::all_finite() const noexcept {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.rows_ != rows_ || rhs.cols_ != cols_)
        throw DimensionError("operator+=: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    ops::tally(data_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.rows_ != rows_ || rhs.cols_ != cols_)
        throw DimensionError("operator-=: shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    ops::tally(data_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    ops::tally(data_.size());
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    // c[:,j] += b(k,j) * a[:,k]: unit stride on both column walks.
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto out = c.column(j);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex bkj = b(k, j);
            auto ak = a.column(k);
            for (std::size_t i = 0; i < a.rows(); ++i) out[i] += ak[i] * bkj;
        }
    }
    ops::tally(static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols());
    return c;
}

ComplexMatrix conj_transpose_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("conj_transpose_matmul: row counts differ");
    ComplexMatrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto bj = b.column(j);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            auto ai = a.column(i);
            Complex s{};
            for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(ai[k]) * bj[k];
            c(i, j) = s;
        }
    }
    ops::tally(static_cast<std::uint64_t>(a.cols()) * a.rows() * b.cols());
    return c;
}

ComplexMatrix matmul_conj_transpose(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("matmul_conj_transpose: column counts differ");
    ComplexMatrix c(a.rows(), b.rows());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        auto ak = a.column(k);
        auto bk = b.column(k);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const Complex s = std::conj(bk[j]);
            auto out = c.column(j);
            for (std::size_t i = 0; i < a.rows(); ++i) out[i] += ak[i] * s;
        }
    }
    ops::tally(static_cast<std::uint64_t>(a.rows()) * a.cols() * b.rows());
    return c;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
    if (a.cols() != x.size()) throw DimensionError("matvec: dimensions differ");
    std::vector<Complex> y(a.rows());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        auto ak = a.column(k);
        const Complex xk = x[k];
        for (std::size_t i = 0; i < a.rows(); ++i) y[i] += ak[i] * xk;
    }
    ops::tally(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return y;
}

std::vector<Complex> conj_transpose_matvec(const ComplexMatrix& a, std::span<const Complex> y) {
    if (a.rows() != y.size()) throw DimensionError("conj_transpose_matvec: dimensions differ");
    std::vector<Complex> out(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        auto ac = a.column(c);
        Complex s{};
        for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(ac[k]) * y[k];
        out[c] = s;
    }
    ops::tally(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return out;
}

double relative_error(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("relative_error: shapes differ");
    double num = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r) num += std::norm(a(r, c) - b(r, c));
    const double den = b.frobenius_norm();
    if (den == 0.0) return std::sqrt(num) == 0.0 ? 0.0 : std::sqrt(num);
    return std::sqrt(num) / den;
}

} // namespace mimo
