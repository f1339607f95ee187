#pragma once

#include <stdexcept>
#include <string>

namespace knotperiod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input validation
struct NotPrime : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct KappaWeightNonzero : Error { using Error::Error; };
struct NoDistinguishedGenerator : Error { using Error::Error; };
struct TrivialRelator : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotKnotDeterminant : Error { using Error::Error; };

// algebraic preconditions
struct NotIrreducible : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct ZeroRoot : Error { using Error::Error; };
struct ZeroMatrixModP : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotCompanionShape : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct SingularT : Error { using Error::Error; };
struct OrderOutOfRange : Error { using Error::Error; };

// computed quantities that contradict each other; always a bug, never user error
struct InconsistentCensus : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

// checked 64-bit arithmetic hit its limit
struct Overflow : Error { using Error::Error; };

} // namespace knotperiod
