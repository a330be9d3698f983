#pragma once

#include <atomic>

namespace jdc {

// Vassiliev-degree bound for canonicalization and generation. All built-in
// computations finish at degree <= 6; the bound exists to catch runaway input.
inline constexpr int kDefaultMaxDegree = 8;

inline std::atomic<int>& max_degree_slot() {
    static std::atomic<int> slot{kDefaultMaxDegree};
    return slot;
}

inline int max_degree() { return max_degree_slot().load(std::memory_order_relaxed); }

inline void set_max_degree(int bound) { max_degree_slot().store(bound, std::memory_order_relaxed); }

} // namespace jdc
