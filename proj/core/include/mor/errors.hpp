#ifndef MOR_ERRORS_HPP
#define MOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};
struct ModulusMismatch : Error {
    ModulusMismatch() : Error("operands have different moduli") {}
    using Error::Error;
};
struct ContextMismatch : Error {
    ContextMismatch() : Error("operands belong to different extension fields") {}
    using Error::Error;
};
struct DimensionMismatch : Error {
    DimensionMismatch() : Error("matrix dimensions incompatible") {}
    using Error::Error;
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
    using Error::Error;
};
struct ParamsMismatch : Error {
    ParamsMismatch() : Error("group parameters differ") {}
    using Error::Error;
};
struct NonInvertibleInducedMap : Error {
    NonInvertibleInducedMap() : Error("generator images do not generate the group (induced map singular)") {}
    using Error::Error;
};
struct InvalidInput : Error {
    using Error::Error;
};
struct ResourceLimit : Error {
    using Error::Error;
};
struct Inconsistent : Error {
    using Error::Error;
};
struct NoSolution : Error {
    using Error::Error;
};
struct EigenvectorMismatch : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct DegenerateKey : Error {
    using Error::Error;
};
struct MalformedCiphertext : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace mor

#endif
