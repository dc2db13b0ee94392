#pragma once

#include <cstdint>

namespace mimo::ops {

namespace detail {
inline thread_local std::uint64_t counter = 0;
inline thread_local bool active = false;
} // namespace detail

// Convention: one complex multiply-accumulate counts 1; an addition (or
// scaling) without a multiply-accumulate also counts 1. Pure data movement
// counts 0.
inline void tally(std::uint64_t n) {
    if (detail::active) detail::counter += n;
}

// RAII window that activates the kernel operation counter on this thread.
class CountScope {
public:
    CountScope() {
        detail::counter = 0;
        detail::active = true;
    }
    ~CountScope() { detail::active = false; }
    CountScope(const CountScope&) = delete;
    CountScope& operator=(const CountScope&) = delete;

    std::uint64_t count() const { return detail::counter; }
};

} // namespace mimo::ops
