#ifndef AIRPOCKETS_ERROR_HPP
#define AIRPOCKETS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace airpockets {

enum class ErrorCode {
    MalformedToken,
    ConsecutiveDowns,
    NotPrime,
    NotDAP,
    BadEnds,
    InfeasibleSpec,
    OrderMismatch,
    DivisionByZeroSeries,
    ValuationUnderflow,
    BadConstantTerm,
    NonInvertible,
    IndexOutOfRange,
    SingularToOrder,
    NotInFamily,
    NotAlternating,
    NotInCPrime,
    NetworkUnavailable,
    ParseError,
    UnknownSequence,
    NoAlignment,
    UnknownName,
    BadParams,
    NonIntegral,
    CrossCheckFailed,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::ConsecutiveDowns: return "ConsecutiveDowns";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotDAP: return "NotDAP";
    case ErrorCode::BadEnds: return "BadEnds";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorCode::ValuationUnderflow: return "ValuationUnderflow";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SingularToOrder: return "SingularToOrder";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotInCPrime: return "NotInCPrime";
    case ErrorCode::NetworkUnavailable: return "NetworkUnavailable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSequence: return "UnknownSequence";
    case ErrorCode::NoAlignment: return "NoAlignment";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace airpockets

#endif // AIRPOCKETS_ERROR_HPP
