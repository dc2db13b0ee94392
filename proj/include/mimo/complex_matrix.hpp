#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mimo/errors.hpp"

namespace mimo {

using Complex = std::complex<double>;

// Dense column-major complex matrix, the single carrier for channels, Gram
// matrices and maintained inverses. Column-major keeps a user's 4-column
// channel block contiguous, so appending/dropping users is cheap.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<Complex> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const Complex> column(std::size_t c) const {
        return {data_.data() + c * rows_, rows_};
    }

    ComplexMatrix conj_transpose() const;

    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

    void append_cols(const ComplexMatrix& right);
    void erase_cols(std::size_t first, std::size_t count);

    bool all_finite() const noexcept;
    double frobenius_norm() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

// Standard product; dimension mismatch throws, never truncates.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

// A^H * B and A * B^H without materializing the adjoint.
ComplexMatrix conj_transpose_matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_conj_transpose(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x);
std::vector<Complex> conj_transpose_matvec(const ComplexMatrix& a, std::span<const Complex> y);

// ||a - b||_F / max(||b||_F, eps) -- shared yardstick for oracle checks.
double relative_error(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace mimo
