#pragma once

#include <stdexcept>
#include <string>

namespace resolvent {

// All library failures derive from Error so the CLI can map them to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error { using Error::Error; };
class ReferenceError : public Error { using Error::Error; };
class IntegrityError : public Error { using Error::Error; };
class DataError : public Error { using Error::Error; };
class UnsupportedSizeError : public Error { using Error::Error; };

// Spectral-sequence bookkeeping.
class ContradictionError : public Error { using Error::Error; };
class InconsistencyError : public Error { using Error::Error; };
class AmbiguityError : public Error { using Error::Error; };

// Numerical certification.
class DegenerateInputError : public Error { using Error::Error; };
class ArityError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class RegularValueNotFound : public Error { using Error::Error; };
class InconclusiveAtDepth : public Error { using Error::Error; };

}  // namespace resolvent
