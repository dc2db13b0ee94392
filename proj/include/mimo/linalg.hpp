#pragma once

#include <cstddef>
#include <vector>

#include "mimo/complex_matrix.hpp"

namespace mimo {

// Index map with gather semantics: applying p to a vector v yields
// out[k] = v[p[k]].  Applied symmetrically to a matrix it computes P·M·Pᵀ.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> map);

    static Permutation identity(std::size_t n);
    // Moves the index range [first, first+count) to the end, preserving the
    // relative order of everything else.  Used to rotate a departing user's
    // columns into the trailing block before a partitioned-inverse downdate.
    static Permutation rotate_to_back(std::size_t n, std::size_t first, std::size_t count);

    std::size_t size() const { return map_.size(); }
    std::size_t operator[](std::size_t k) const { return map_[k]; }
    const std::vector<std::size_t>& map() const { return map_; }

    Permutation inverse() const;
    bool is_identity() const;

private:
    std::vector<std::size_t> map_;
};

// Square matrix asserted Hermitian at construction (1e-12 relative Frobenius
// tolerance).  Positive definiteness is only established when a factorization
// succeeds; the wrapper records intent, not a proof.
class HermitianPD {
public:
    explicit HermitianPD(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    ComplexMatrix m_;
};

// GᴴG with the lower triangle computed and the upper triangle mirrored, so
// the result is Hermitian bit-for-bit and the diagonal exactly real.
HermitianPD gram(const ComplexMatrix& g);

// Lower-triangular L with Z = L·Lᴴ.  Throws SingularMatrixError naming the
// first pivot that is not strictly positive (or not finite).
ComplexMatrix cholesky_factor(const HermitianPD& z);

// Z⁻¹ via Cholesky factorization and triangular inversion.  The result is
// explicitly Hermitian (lower triangle mirrored).
ComplexMatrix hpd_inverse(const HermitianPD& z);

// P·M·Pᵀ: out(r, c) = in(p[r], p[c]).
ComplexMatrix symmetric_permute(const ComplexMatrix& m, const Permutation& p);

// Column gather: out column c is in column p[c].
ComplexMatrix permute_cols(const ComplexMatrix& m, const Permutation& p);

}  // namespace mimo
