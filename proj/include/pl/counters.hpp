#pragma once

#include <cstdint>

namespace pl {

// Per-thread tallies of the primitive operations that the complexity bounds
// are stated in. Benchmarks snapshot and subtract these around an operation.
struct PrimitiveCounters {
    std::uint64_t classify = 0;      // three-way case tests in the tentative search
    std::uint64_t split = 0;         // envelope-tree split calls
    std::uint64_t join = 0;          // envelope-tree join calls
    std::uint64_t locate_steps = 0;  // nodes visited by locate (ray shooting)

    std::uint64_t updates() const { return classify + split + join; }
};

PrimitiveCounters& counters();

}  // namespace pl
