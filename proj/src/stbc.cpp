#include "mimo/stbc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mimo/errors.hpp"

namespace mimo {

const CodeConstants& coding_constants() {
    static const CodeConstants k = [] {
        const double s5 = std::sqrt(5.0);
        const double b = (1.0 + s5) / 2.0;
        const double d = (1.0 - s5) / 2.0;
        CodeConstants c;
        c.b = b;
        c.d = d;
        c.a = Complex(1.0, 1.0 - b) / s5;
        c.c = Complex(1.0, 1.0 - d) / s5;
        c.gamma = Complex(0.0, 1.0);
        return c;
    }();
    return k;
}

ComplexMatrix encode(const SymbolVector& x, const CodeConstants& k) {
    ComplexMatrix out(2, 2);
    out(0, 0) = k.a * (x[0] + k.b * x[1]);
    out(0, 1) = k.gamma * k.a * (x[2] + k.b * x[3]);
    out(1, 0) = k.c * (x[2] + k.d * x[3]);
    out(1, 1) = k.c * (x[0] + k.d * x[1]);
    return out;
}

ComplexMatrix effective_channel(const ComplexMatrix& h, const CodeConstants& k) {
    if (h.cols() != 2)
        throw DimensionError("effective_channel expects N x 2 input, got " +
                             std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
    const std::size_t n = h.rows();
    auto h1 = h.column(0);
    auto h2 = h.column(1);
    ComplexMatrix out(2 * n, 4);
    for (std::size_t r = 0; r < n; ++r) {
        // slot-1 rows
        out(r, 0) = k.a * h1[r];
        out(r, 1) = k.a * k.b * h1[r];
        out(r, 2) = k.c * h2[r];
        out(r, 3) = k.c * k.d * h2[r];
        // slot-2 rows
        out(n + r, 0) = k.c * h2[r];
        out(n + r, 1) = k.c * k.d * h2[r];
        out(n + r, 2) = k.gamma * k.a * h1[r];
        out(n + r, 3) = k.gamma * k.a * k.b * h1[r];
    }
    return out;
}

std::vector<std::size_t> detect_indices(std::span<const Complex> filtered,
                                        std::span<const Complex> gains,
                                        const Constellation& cons, double rho) {
    if (cons.size() == 0) throw std::invalid_argument("empty constellation");
    if (filtered.size() != gains.size())
        throw DimensionError("filtered/gain length mismatch: " + std::to_string(filtered.size()) +
                             " vs " + std::to_string(gains.size()));
    const double scale = std::sqrt(rho / 2.0);
    std::vector<std::size_t> out(filtered.size());
    for (std::size_t p = 0; p < filtered.size(); ++p) {
        const Complex g = scale * gains[p];
        std::size_t best = 0;
        double best_d2 = std::norm(filtered[p] - g * cons.point(0));
        for (std::size_t i = 1; i < cons.size(); ++i) {
            const double d2 = std::norm(filtered[p] - g * cons.point(i));
            if (d2 < best_d2) {  // strict: ties keep the lowest index
                best_d2 = d2;
                best = i;
            }
        }
        out[p] = best;
    }
    return out;
}

std::vector<Complex> detect_symbols(std::span<const Complex> filtered,
                                    std::span<const Complex> gains, const Constellation& cons,
                                    double rho) {
    const auto idx = detect_indices(filtered, gains, cons, rho);
    std::vector<Complex> out(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p) out[p] = cons.point(idx[p]);
    return out;
}

}  // namespace mimo
