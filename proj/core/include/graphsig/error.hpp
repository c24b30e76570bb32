#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphsig {

enum class ErrorCode {
  NonSquare,
  NegativeWeight,
  NonFinite,
  EmptyGraph,
  KindMismatch,
  NotStronglyConnected,
  ZeroDegreeVertex,
  ZeroOutDegree,
  NotConverged,
  SizeTooSmall,
  BadProbability,
  BlockSizeMismatch,
  KTooLarge,
  DegenerateCloud,
  PatchLargerThanImage,
  GraphTooLargeForDense,
  NonSymmetricLaplacian,
  MissingFourierBasis,
  ShapeMismatch,
  IndexOutOfRange,
  BadParameter,
  NotTightFrame,
  SingularInteriorBlock,
  EmptyKeptSet,
  NotConnected,
  SolverFailure,
  LevelMismatch,
  MissingCoordinates,
  NotSerializable,
  IoError,
  ParseError,
};

/// Stable identifier of an error code, e.g. "NonSquare".
std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library. what() is prefixed with the error name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace graphsig
