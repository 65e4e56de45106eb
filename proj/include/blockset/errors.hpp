#pragma once

#include <stdexcept>
#include <string>

namespace blockset {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OrderOutOfRange : Error { using Error::Error; };

// planes
struct SizeOutOfRange : Error { using Error::Error; };
struct InvalidQuasifield : Error { using Error::Error; };
struct NotAffine : Error { using Error::Error; };
struct NotProjective : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(column_)),
          line(line_), column(column_) {}
};

// blocking / knots
struct StructureMismatch : Error { using Error::Error; };
struct NoCoordinates : Error { using Error::Error; };
struct NotBlocking : Error { using Error::Error; };
struct ExcludedPointCovered : Error { using Error::Error; };
struct NotACover : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };

// lemma oracle
struct RangeError : Error { using Error::Error; };

// Raised when a proved-optimal search result contradicts a published bound.
// This must never fire on a correct implementation; it exists as a tripwire.
struct BoundViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace blockset
