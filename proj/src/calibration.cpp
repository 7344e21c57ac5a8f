#include "replica/curves.hpp"
#include "replica/errors.hpp"
#include "replica/pricers.hpp"
#include "root_finding.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace replica {

SurvivalCurve calibrate_flat_hazard(const DiscountCurve& discount, const Schedule& schedule,
                                    Spread cds_quote, Real recovery) {
    require(recovery >= 0.0 && recovery < 1.0, ErrorCode::InvalidInput,
            fmt::format("recovery {} outside [0, 1)", recovery));
    require(std::isfinite(cds_quote) && cds_quote >= 0.0, ErrorCode::InvalidInput,
            fmt::format("CDS quote {} must be a non-negative number", cds_quote));

    const Time t0 = schedule.t0();
    auto residual = [&](double hazard) {
        return par_cds_spread(discount, SurvivalCurve::flat(hazard, t0), schedule, recovery).spread -
               cds_quote;
    };
    const auto hazard = detail::bracketed_root(residual, 0.0, kMaxCalibrationHazard);
    require(hazard.has_value(), ErrorCode::QuoteUnattainable,
            fmt::format("no flat hazard in [0, {}] reproduces the quote {}",
                        kMaxCalibrationHazard, cds_quote));
    const double tolerance = 1e-12 * std::max(1.0, cds_quote);
    require(std::abs(residual(*hazard)) <= tolerance, ErrorCode::QuoteUnattainable,
            fmt::format("calibration stalled {} away from the quote", residual(*hazard)));
    return SurvivalCurve::flat(*hazard, t0);
}

} // namespace replica
