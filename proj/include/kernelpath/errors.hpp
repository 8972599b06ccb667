#ifndef KERNELPATH_ERRORS_HPP
#define KERNELPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kernelpath {

// Base class for every domain error raised by the library. CLI maps these
// onto stable exit codes; tests match on the concrete type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact algebra
struct NotAUnit : Error { using Error::Error; };

// model / file parsing
struct ParseError : Error { using Error::Error; };
struct UnknownStep : Error { using Error::Error; };
struct InvalidStep : Error { using Error::Error; };
struct DanglingState : Error { using Error::Error; };
struct UnsupportedStepSet : Error { using Error::Error; };

// kernel & generating functions
struct DegenerateKernel : Error { using Error::Error; };
struct NonzeroRemainder : Error { using Error::Error; };
struct OddCoefficientPresent : Error { using Error::Error; };
struct OutOfOrder : Error { using Error::Error; };

// statistics
struct EmptyClass : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct ZeroVariance : Error { using Error::Error; };
struct NoMarkInSpec : Error { using Error::Error; };

// oracle
struct LimitExceeded : Error { using Error::Error; };

// configuration and internal consistency
struct InvalidConfig : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

} // namespace kernelpath

#endif
