#pragma once

#include <stdexcept>
#include <string>

namespace quatknot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field / scalar arithmetic
struct DivisionByZero : Error { using Error::Error; };
struct DescriptorMismatch : Error { using Error::Error; };

// matrix algebra
struct SingularMatrix : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };

// switch construction
struct SingularInput : Error { using Error::Error; };
struct NotASolution : Error { using Error::Error; };
struct CommutingPair : Error { using Error::Error; };
struct NonCommutingInputs : Error { using Error::Error; };

// solver
struct TripleIndependent : Error { using Error::Error; };
struct PoleAtA0 : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// link invariants
struct NonInvertibleSwitch : Error { using Error::Error; };
struct DepthExceedsDimension : Error { using Error::Error; };
struct BadPosition : Error { using Error::Error; };

// parsing
struct SyntaxError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// violated internal invariant, always a bug
struct InternalError : Error { using Error::Error; };

} // namespace quatknot
