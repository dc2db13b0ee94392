#include "mimo/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mimo/errors.hpp"
#include "mimo/op_count.hpp"

namespace mimo {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<char> seen(map_.size(), 0);
    for (std::size_t k = 0; k < map_.size(); ++k) {
        const std::size_t v = map_[k];
        if (v >= map_.size() || seen[v])
            throw DimensionError("permutation map is not a bijection over [0, " +
                                 std::to_string(map_.size()) + ")");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t k = 0; k < n; ++k) m[k] = k;
    return Permutation(std::move(m));
}

Permutation Permutation::rotate_to_back(std::size_t n, std::size_t first, std::size_t count) {
    if (first + count > n)
        throw DimensionError("rotate_to_back: range [" + std::to_string(first) + ", " +
                             std::to_string(first + count) + ") exceeds size " + std::to_string(n));
    std::vector<std::size_t> m;
    m.reserve(n);
    for (std::size_t k = 0; k < first; ++k) m.push_back(k);
    for (std::size_t k = first + count; k < n; ++k) m.push_back(k);
    for (std::size_t k = first; k < first + count; ++k) m.push_back(k);
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t k = 0; k < map_.size(); ++k) inv[map_[k]] = k;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < map_.size(); ++k)
        if (map_[k] != k) return false;
    return true;
}

HermitianPD::HermitianPD(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw DimensionError("HermitianPD requires a square matrix, got " +
                             std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
    double asym = 0.0, norm = 0.0;
    for (std::size_t c = 0; c < m_.cols(); ++c) {
        for (std::size_t r = 0; r < m_.rows(); ++r) {
            const Complex diff = m_(r, c) - std::conj(m_(c, r));
            asym += std::norm(diff);
            norm += std::norm(m_(r, c));
        }
    }
    if (asym > 1e-24 * norm)
        throw DimensionError("matrix is not Hermitian (relative asymmetry " +
                             std::to_string(std::sqrt(asym / (norm > 0 ? norm : 1.0))) + ")");
}

HermitianPD gram(const ComplexMatrix& g) {
    const std::size_t m = g.rows(), n = g.cols();
    ComplexMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto gc = g.column(c);
        for (std::size_t r = c; r < n; ++r) {
            auto gr = g.column(r);
            Complex acc{};
            for (std::size_t k = 0; k < m; ++k) acc += std::conj(gr[k]) * gc[k];
            if (r == c) acc = Complex(acc.real(), 0.0);
            out(r, c) = acc;
            out(c, r) = std::conj(acc);
        }
    }
    ops::tally(m * (n * (n + 1)) / 2);
    return HermitianPD(std::move(out));
}

ComplexMatrix cholesky_factor(const HermitianPD& z) {
    const ComplexMatrix& a = z.matrix();
    const std::size_t n = z.dim();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > 0.0) || !std::isfinite(d))
            throw SingularMatrixError(j, "factorization pivot " + std::to_string(j) +
                                             " is not positive (" + std::to_string(d) + ")");
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        ops::tally(j + 1);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
            ops::tally(j + 1);
        }
    }
    return l;
}

namespace {

// X = L⁻¹ for lower-triangular L, by forward substitution per column.
ComplexMatrix lower_triangular_inverse(const ComplexMatrix& l) {
    const std::size_t n = l.rows();
    ComplexMatrix x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        x(j, j) = 1.0 / l(j, j);
        ops::tally(1);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s{};
            for (std::size_t k = j; k < i; ++k) s += l(i, k) * x(k, j);
            x(i, j) = -s / l(i, i);
            ops::tally(i - j + 1);
        }
    }
    return x;
}

}  // namespace

ComplexMatrix hpd_inverse(const HermitianPD& z) {
    const std::size_t n = z.dim();
    const ComplexMatrix l = cholesky_factor(z);
    const ComplexMatrix x = lower_triangular_inverse(l);
    // Z⁻¹ = (L·Lᴴ)⁻¹ = XᴴX; X is lower triangular, so entry (r, c) with r ≥ c
    // only sums over k ≥ r.
    ComplexMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto xc = x.column(c);
        for (std::size_t r = c; r < n; ++r) {
            auto xr = x.column(r);
            Complex acc{};
            for (std::size_t k = r; k < n; ++k) acc += std::conj(xr[k]) * xc[k];
            if (r == c) acc = Complex(acc.real(), 0.0);
            out(r, c) = acc;
            out(c, r) = std::conj(acc);
            ops::tally(n - r);
        }
    }
    return out;
}

ComplexMatrix symmetric_permute(const ComplexMatrix& m, const Permutation& p) {
    if (m.rows() != m.cols())
        throw DimensionError("symmetric_permute requires a square matrix");
    if (p.size() != m.rows())
        throw DimensionError("permutation size " + std::to_string(p.size()) +
                             " does not match matrix dimension " + std::to_string(m.rows()));
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = m(p[r], p[c]);
    return out;
}

ComplexMatrix permute_cols(const ComplexMatrix& m, const Permutation& p) {
    if (p.size() != m.cols())
        throw DimensionError("permutation size " + std::to_string(p.size()) +
                             " does not match column count " + std::to_string(m.cols()));
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto src = m.column(p[c]);
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = src[r];
    }
    return out;
}

}  // namespace mimo
