#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace grs {

enum class ErrorCode {
  kSeedInvalid,
  kNotGolay,
  kEnergyMismatch,
  kDegreeTooLarge,
  kZeroSequence,
  kZeroLength,
  kBudgetExceeded,
  kShiftOutOfRange,
  kLevelTooSmall,
  kShiftZero,
  kDivisionByZero,
  kRationalInput,
  kSeedNotRational,
  kShiftNotEntered,
  kOverflow,
  kParse,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. `shift` names the offending shift for
// the diagnostics that have one (NotGolay).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::int64_t> shift = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::int64_t> shift() const { return shift_; }

 private:
  ErrorCode code_;
  std::optional<std::int64_t> shift_;
};

}  // namespace grs
