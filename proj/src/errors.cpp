#include "replica/errors.hpp"

namespace replica {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidInput:
        return "InvalidInput";
    case ErrorCode::InvalidFrequency:
        return "InvalidFrequency";
    case ErrorCode::NonIntegralPeriods:
        return "NonIntegralPeriods";
    case ErrorCode::MaturityNotOnGrid:
        return "MaturityNotOnGrid";
    case ErrorCode::TimeBeforeAnchor:
        return "TimeBeforeAnchor";
    case ErrorCode::InvalidInterval:
        return "InvalidInterval";
    case ErrorCode::DegenerateAnnuity:
        return "DegenerateAnnuity";
    case ErrorCode::QuoteUnattainable:
        return "QuoteUnattainable";
    case ErrorCode::CrossedMarket:
        return "CrossedMarket";
    case ErrorCode::InconsistentSpecs:
        return "InconsistentSpecs";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace replica
