#pragma once

#include <stdexcept>
#include <string>

namespace ergo {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// measure-core
struct MalformedInterval : Error { using Error::Error; };
struct MixedSpaceKinds : Error { using Error::Error; };

// group-model
struct ModelMismatch : Error { using Error::Error; };
struct BallTooLarge : Error { using Error::Error; };
struct InvalidModel : Error { using Error::Error; };

// action-model
struct AsymmetricGeneratingSet : Error { using Error::Error; };

// expansion
struct TooLargeForExact : Error { using Error::Error; };
struct EmptyAdmissibleRange : Error { using Error::Error; };
struct EmptyDomain : Error { using Error::Error; };
struct ProfileGap : Error { using Error::Error; };
struct InvalidConstant : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct EpsilonTooLarge : Error { using Error::Error; };
struct NoValidD : Error { using Error::Error; };
struct DeltaOutOfRange : Error { using Error::Error; };
struct NotMeasurePreserving : Error { using Error::Error; };
struct RatioUnbounded : Error { using Error::Error; };

// folner-structure
struct NotASubset : Error { using Error::Error; };
struct NotMaximal : Error { using Error::Error; };
struct NoValidStage : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// approximating / scenarios
struct BadSpec : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

}  // namespace ergo
