#pragma once

namespace replica {

/// Year-valued times and year fractions.
using Time = double;
/// Rates and spreads, decimal per year (0.01 = 100bp).
using Rate = double;
using Spread = double;
using Real = double;

} // namespace replica
