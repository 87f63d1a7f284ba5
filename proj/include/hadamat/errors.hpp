#pragma once

#include <stdexcept>
#include <string>

namespace hadamat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularError : Error {
    explicit SingularError(const std::string& msg = "matrix is numerically singular")
        : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch")
        : Error(msg) {}
};

struct EmptySelection : Error {
    explicit EmptySelection(const std::string& msg = "empty index selection")
        : Error(msg) {}
};

struct DomainViolation : Error {
    explicit DomainViolation(const std::string& msg = "argument outside function domain")
        : Error(msg) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg = "precondition failed")
        : Error(msg) {}
};

struct NotGum : Error {
    explicit NotGum(const std::string& msg = "matrix is not a GUM") : Error(msg) {}
};

struct NotCbf : Error {
    explicit NotCbf(const std::string& msg = "matrix is not in CBF") : Error(msg) {}
};

struct ConstructionFailed : Error {
    explicit ConstructionFailed(const std::string& msg = "construction failed verification")
        : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg = "parse error") : Error(msg) {}
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& msg = "unknown suite name") : Error(msg) {}
};

} // namespace hadamat
