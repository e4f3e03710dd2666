#include "contact_sextic/rational.hpp"

#include <cctype>

#include "contact_sextic/error.hpp"

namespace contact_sextic {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::ZeroDegree: return "ZeroDegree";
        case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ClosureFailure: return "ClosureFailure";
        case ErrorCode::DegenerateMap: return "DegenerateMap";
        case ErrorCode::VerticalCurve: return "VerticalCurve";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::NotOnCurve: return "NotOnCurve";
        case ErrorCode::SingularBranch: return "SingularBranch";
        case ErrorCode::NonZeroDimensional: return "NonZeroDimensional";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::InadmissibleQuartic: return "InadmissibleQuartic";
        case ErrorCode::DegenerateLeading: return "DegenerateLeading";
        case ErrorCode::DegenerateConic: return "DegenerateConic";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SingularJet: return "SingularJet";
        case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
        case ErrorCode::SingularJacobian: return "SingularJacobian";
        case ErrorCode::MaxIterations: return "MaxIterations";
        case ErrorCode::BranchSelectionFailure: return "BranchSelectionFailure";
    }
    return "UnknownError";
}

}  // namespace contact_sextic
