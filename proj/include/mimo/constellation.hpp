#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mimo/complex_matrix.hpp"

namespace mimo {

// Unit-average-energy, Gray-labeled constellation.  A point's index is its
// bit label, so bit errors between indices are popcount(i ^ j).
class Constellation {
public:
    static Constellation qpsk();
    static Constellation qam16();
    static Constellation parse(std::string_view name);  // "qpsk" or "16qam"

    const std::string& name() const { return name_; }
    const std::vector<Complex>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    unsigned bits_per_symbol() const { return bits_; }
    const Complex& point(std::size_t i) const { return points_[i]; }

private:
    Constellation(std::string name, std::vector<Complex> pts, unsigned bits)
        : name_(std::move(name)), points_(std::move(pts)), bits_(bits) {}

    std::string name_;
    std::vector<Complex> points_;
    unsigned bits_;
};

}  // namespace mimo
