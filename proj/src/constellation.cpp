#include "mimo/constellation.hpp"

#include <cmath>
#include <stdexcept>

namespace mimo {

Constellation Constellation::qpsk() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Complex> pts(4);
    // bit0 → real sign, bit1 → imag sign; nearest neighbours differ in one bit
    for (std::size_t i = 0; i < 4; ++i)
        pts[i] = Complex((1.0 - 2.0 * static_cast<double>(i & 1)) * s,
                         (1.0 - 2.0 * static_cast<double>((i >> 1) & 1)) * s);
    return Constellation("qpsk", std::move(pts), 2);
}

Constellation Constellation::qam16() {
    // per-axis Gray map of a 2-bit pair: 00→-3, 01→-1, 11→+1, 10→+3
    static const double lev[4] = {-3.0, -1.0, +3.0, +1.0};
    const double s = 1.0 / std::sqrt(10.0);
    std::vector<Complex> pts(16);
    for (std::size_t i = 0; i < 16; ++i)
        pts[i] = Complex(lev[i & 3] * s, lev[(i >> 2) & 3] * s);
    return Constellation("16qam", std::move(pts), 4);
}

Constellation Constellation::parse(std::string_view name) {
    if (name == "qpsk") return qpsk();
    if (name == "16qam" || name == "qam16") return qam16();
    throw std::invalid_argument("unknown constellation '" + std::string(name) +
                                "' (expected qpsk or 16qam)");
}

}  // namespace mimo
