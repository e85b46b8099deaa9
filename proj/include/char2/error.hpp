#pragma once

#include <stdexcept>
#include <string>

namespace char2 {

enum class Errc {
    MixedRings,
    DivisionByZero,
    NoInverse,
    WrongCharacteristic,
    ArityMismatch,
    NonIntegralAfterScaling,
    NotASquare,
    BudgetExceeded,
    OutOfRange,
    RankDeficient,
    NotHomogeneous,
    NotIsotropic,
    NotGeneral,
    ModelMismatch,
    InvalidConfig,
    ParseError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MixedRings: return "MixedRings";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NoInverse: return "NoInverse";
        case Errc::WrongCharacteristic: return "WrongCharacteristic";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::NonIntegralAfterScaling: return "NonIntegralAfterScaling";
        case Errc::NotASquare: return "NotASquare";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::NotIsotropic: return "NotIsotropic";
        case Errc::NotGeneral: return "NotGeneral";
        case Errc::ModelMismatch: return "ModelMismatch";
        case Errc::InvalidConfig: return "InvalidConfig";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace char2
