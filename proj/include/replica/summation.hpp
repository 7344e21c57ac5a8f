#pragma once

#include <cassert>
#include <cstddef>
#include <span>

namespace replica {

/// sum_k a_k * sum_{h>=k} b_h
inline double nested_suffix_sum(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double total = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double tail = 0.0;
        for (std::size_t h = k; h < b.size(); ++h)
            tail += b[h];
        total += a[k] * tail;
    }
    return total;
}

/// sum_h b_h * sum_{k<=h} a_k; equal to nested_suffix_sum by exchanging the
/// order of summation, but linear in the length.
inline double nested_prefix_sum(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double total = 0.0;
    double head = 0.0;
    for (std::size_t h = 0; h < b.size(); ++h) {
        head += a[h];
        total += b[h] * head;
    }
    return total;
}

} // namespace replica
