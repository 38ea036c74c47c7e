#pragma once

#include <cstdint>
#include <random>

namespace pseudolin::detail {

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementation, so seeds reproduce everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long>(eng_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do v = eng_();
        while (v >= limit);
        return lo + static_cast<long>(v % span);
    }
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 eng_;
};

} // namespace pseudolin::detail
