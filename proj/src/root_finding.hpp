#pragma once

#include "replica/errors.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <optional>

namespace replica::detail {

inline constexpr std::uintmax_t kMaxRootIterations = 200;

/// Bracketed root of f on [lo, hi]; nullopt when f does not change sign.
/// Iterates until the bracket collapses to adjacent doubles or the
/// iteration budget is spent.
template <class F>
std::optional<double> bracketed_root(F f, double lo, double hi) {
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0)
        return lo;
    if (f_hi == 0.0)
        return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi))
        return std::nullopt;
    std::uintmax_t iterations = kMaxRootIterations;
    const auto bracket = boost::math::tools::toms748_solve(
        f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(52), iterations);
    const double a = bracket.first;
    const double b = bracket.second;
    return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

} // namespace replica::detail
