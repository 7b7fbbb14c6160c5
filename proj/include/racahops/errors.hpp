#pragma once

#include <stdexcept>
#include <string>

namespace racahops {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

struct ModeArityMismatch : Error {
    using Error::Error;
};

struct VarSetMismatch : Error {
    using Error::Error;
};

struct MissingVariable : Error {
    using Error::Error;
};

struct NotInSpan : Error {
    using Error::Error;
};

struct DependentBasis : Error {
    using Error::Error;
};

struct KindMismatch : Error {
    using Error::Error;
};

struct EmptySubset : Error {
    using Error::Error;
};

struct InadmissibleParameters : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ArityOutOfRange : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace racahops
