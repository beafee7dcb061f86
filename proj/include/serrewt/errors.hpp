#pragma once

#include <stdexcept>
#include <string>

namespace serrewt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One type per failure mode so the CLI can map them onto exit codes.
struct DepthError : Error { using Error::Error; };
struct CompatibilityError : Error { using Error::Error; };
struct LatticeError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct ClassificationError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct NotIwahoriAdapted : Error { using Error::Error; };
struct DecompositionError : Error { using Error::Error; };
struct RelationViolation : Error { using Error::Error; };
struct MissingVariable : Error { using Error::Error; };
struct UnknownRow : Error { using Error::Error; };
struct UnlistedComponent : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

} // namespace serrewt
