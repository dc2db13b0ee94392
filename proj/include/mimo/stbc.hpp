#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mimo/complex_matrix.hpp"
#include "mimo/constellation.hpp"

namespace mimo {

// Constants of the rate-2, 2-antenna, 2-slot block code.  b and d are the
// golden-ratio pair; a and c balance per-symbol energy so that
// |a|²+|c|² = 1, |ab|²+|cd|² = 1 and |a|²b+|c|²d = 0.
struct CodeConstants {
    Complex a;
    Complex b;
    Complex c;
    Complex d;
    Complex gamma;
};

const CodeConstants& coding_constants();

// One user's payload for one code block.
struct SymbolVector {
    std::array<Complex, 4> x;

    Complex& operator[](std::size_t i) { return x[i]; }
    const Complex& operator[](std::size_t i) const { return x[i]; }
};

// 2×2 transmit block: rows are antennas, columns are time slots.
ComplexMatrix encode(const SymbolVector& x, const CodeConstants& k);

// The 2N×4 matrix through which the four symbols reach the stacked two-slot
// receive vector: vec(noiseless Y) = effective_channel(H)·x.  Row blocks are
// slot 1 then slot 2.
ComplexMatrix effective_channel(const ComplexMatrix& h, const CodeConstants& k);

// Per-entry nearest-point detection of filtered[p] ≈ √(ρ/2)·gains[p]·x.
// Ties break toward the lowest point index.
std::vector<std::size_t> detect_indices(std::span<const Complex> filtered,
                                        std::span<const Complex> gains,
                                        const Constellation& cons, double rho);

std::vector<Complex> detect_symbols(std::span<const Complex> filtered,
                                    std::span<const Complex> gains, const Constellation& cons,
                                    double rho);

}  // namespace mimo
