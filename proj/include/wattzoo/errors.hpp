#pragma once

#include <stdexcept>
#include <string>

namespace wattzoo {

// Every failure the library reports carries a stable machine-readable code
// (e.g. "MissingRegion", "NonNumericCell") plus a human-readable message.
// Codes are part of the public contract; messages are not.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
// core
inline constexpr const char* MissingRegion = "MissingRegion";
inline constexpr const char* MissingPower = "MissingPower";
inline constexpr const char* InvalidProfile = "InvalidProfile";
// trace_io
inline constexpr const char* MalformedHeader = "MalformedHeader";
inline constexpr const char* MalformedRow = "MalformedRow";
inline constexpr const char* NonNumericCell = "NonNumericCell";
inline constexpr const char* NonMonotoneTimestamp = "NonMonotoneTimestamp";
inline constexpr const char* EmptyOverlap = "EmptyOverlap";
inline constexpr const char* LengthMismatch = "LengthMismatch";
inline constexpr const char* SchemaMismatch = "SchemaMismatch";
inline constexpr const char* TooFewSamples = "TooFewSamples";
// models
inline constexpr const char* OutOfRangeUtilization = "OutOfRangeUtilization";
inline constexpr const char* OutOfRangeThroughput = "OutOfRangeThroughput";
inline constexpr const char* MissingThroughputMax = "MissingThroughputMax";
inline constexpr const char* InsufficientBuckets = "InsufficientBuckets";
inline constexpr const char* EmptyTrainingSet = "EmptyTrainingSet";
inline constexpr const char* NoPositiveUtilizationSamples = "NoPositiveUtilizationSamples";
inline constexpr const char* UnresolvedInput = "UnresolvedInput";
inline constexpr const char* Underdetermined = "Underdetermined";
inline constexpr const char* MissingProfile = "MissingProfile";
inline constexpr const char* SingularDesign = "SingularDesign";
inline constexpr const char* UnknownModelKind = "UnknownModelKind";
// optim
inline constexpr const char* RankDeficient = "RankDeficient";
inline constexpr const char* SolverNotConverged = "SolverNotConverged";
inline constexpr const char* DegenerateComponent = "DegenerateComponent";
inline constexpr const char* NonFiniteLoss = "NonFiniteLoss";
// evaluation
inline constexpr const char* EmptyInput = "EmptyInput";
inline constexpr const char* EmptyReport = "EmptyReport";
// io / config
inline constexpr const char* IoFailure = "IoFailure";
inline constexpr const char* ConfigError = "ConfigError";
inline constexpr const char* UnsupportedFormatVersion = "UnsupportedFormatVersion";
}  // namespace errc

}  // namespace wattzoo
