#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace replica {

enum class ErrorCode {
    InvalidInput,
    InvalidFrequency,
    NonIntegralPeriods,
    MaturityNotOnGrid,
    TimeBeforeAnchor,
    InvalidInterval,
    DegenerateAnnuity,
    QuoteUnattainable,
    CrossedMarket,
    InconsistentSpecs,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition)
        fail(code, message);
}

} // namespace replica
