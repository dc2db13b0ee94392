#pragma once

#include <cstddef>

#include "mimo/complex_matrix.hpp"

namespace mimo {

// 2×2 block view of a square matrix split after index s: f11 is s×s and f22
// is (n−s)×(n−s).  For Hermitian parents f21 = f12ᴴ.
struct BlockPartition {
    ComplexMatrix f11;
    ComplexMatrix f12;
    ComplexMatrix f21;
    ComplexMatrix f22;

    static BlockPartition split(const ComplexMatrix& m, std::size_t s);
};

}  // namespace mimo
