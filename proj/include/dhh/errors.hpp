#pragma once

#include <stdexcept>
#include <string>

namespace dhh {

// Error taxonomy shared by all modules. Every throw site names the violated
// precondition; callers that want diagnostics catch the base type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& w) : Error("ShapeMismatch: " + w) {}
};

struct ContainmentViolation : Error {
    explicit ContainmentViolation(const std::string& w) : Error("ContainmentViolation: " + w) {}
};

struct StabilityViolation : Error {
    explicit StabilityViolation(const std::string& w) : Error("StabilityViolation: " + w) {}
};

struct InversivityRequired : Error {
    explicit InversivityRequired(const std::string& w) : Error("InversivityRequired: " + w) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& w) : Error("DegreeOverflow: " + w) {}
};

struct LiftFailure : Error {
    explicit LiftFailure(const std::string& w) : Error("LiftFailure: " + w) {}
};

struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& w) : Error("WindowTooSmall: " + w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError: " + w) {}
};

struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& w) : Error("AxiomViolation: " + w) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& w) : Error("SingularMatrix: " + w) {}
};

}  // namespace dhh
