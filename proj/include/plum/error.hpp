#ifndef PLUM_ERROR_HPP
#define PLUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace plum {

enum class Errc {
    NonPlanar,
    InvalidRotation,
    Disconnected,
    MissingEdge,
    NotTwoConnected,
    TooLarge,
    AlreadyExpanded,
    NotExpanded,
    EqualEnds,
    DepthCapExceeded,
    InternalOrderViolation,
    EarNotInOneFace,
    DanglingAddress,
    CapExceeded,
    Parse,
    InvalidArgument,
};

/// All library failures surface as this exception; Errc tells callers apart.
class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPlanar: return "NonPlanar";
        case Errc::InvalidRotation: return "InvalidRotation";
        case Errc::Disconnected: return "Disconnected";
        case Errc::MissingEdge: return "MissingEdge";
        case Errc::NotTwoConnected: return "NotTwoConnected";
        case Errc::TooLarge: return "TooLarge";
        case Errc::AlreadyExpanded: return "AlreadyExpanded";
        case Errc::NotExpanded: return "NotExpanded";
        case Errc::EqualEnds: return "EqualEnds";
        case Errc::DepthCapExceeded: return "DepthCapExceeded";
        case Errc::InternalOrderViolation: return "InternalOrderViolation";
        case Errc::EarNotInOneFace: return "EarNotInOneFace";
        case Errc::DanglingAddress: return "DanglingAddress";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::Parse: return "Parse";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace plum

#endif
