#include "graphsig/error.hpp"

namespace graphsig {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::ZeroDegreeVertex: return "ZeroDegreeVertex";
    case ErrorCode::ZeroOutDegree: return "ZeroOutDegree";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::BlockSizeMismatch: return "BlockSizeMismatch";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DegenerateCloud: return "DegenerateCloud";
    case ErrorCode::PatchLargerThanImage: return "PatchLargerThanImage";
    case ErrorCode::GraphTooLargeForDense: return "GraphTooLargeForDense";
    case ErrorCode::NonSymmetricLaplacian: return "NonSymmetricLaplacian";
    case ErrorCode::MissingFourierBasis: return "MissingFourierBasis";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotTightFrame: return "NotTightFrame";
    case ErrorCode::SingularInteriorBlock: return "SingularInteriorBlock";
    case ErrorCode::EmptyKeptSet: return "EmptyKeptSet";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::NotSerializable: return "NotSerializable";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace graphsig
