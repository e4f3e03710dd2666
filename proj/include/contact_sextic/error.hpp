#pragma once

#include <stdexcept>
#include <string>

namespace contact_sextic {

enum class ErrorCode {
    Parse,
    ZeroDegree,
    ZeroLeadingCoefficient,
    ZeroPolynomial,
    UnboundVariable,
    InexactDivision,
    DivisionByZero,
    ClosureFailure,
    DegenerateMap,
    VerticalCurve,
    DegenerateDenominator,
    NotOnCurve,
    SingularBranch,
    NonZeroDimensional,
    CoincidentPoints,
    InadmissibleQuartic,
    DegenerateLeading,
    DegenerateConic,
    InvalidArgument,
    SingularJet,
    StepLimitExceeded,
    SingularJacobian,
    MaxIterations,
    BranchSelectionFailure,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch on the kind.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace contact_sextic
