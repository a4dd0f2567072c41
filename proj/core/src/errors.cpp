#include "qpm/errors.hpp"

namespace qpm {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::QubitCountOutOfRange: return "QubitCountOutOfRange";
    case Errc::InvalidQubitIndex: return "InvalidQubitIndex";
    case Errc::DuplicateQubitIndex: return "DuplicateQubitIndex";
    case Errc::NonUnitaryMatrix: return "NonUnitaryMatrix";
    case Errc::ZeroShots: return "ZeroShots";
    case Errc::UnsupportedOpForSerialization: return "UnsupportedOpForSerialization";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGate: return "UnknownGate";
    case Errc::QubitOutOfRange: return "QubitOutOfRange";
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::QubitCountMismatch: return "QubitCountMismatch";
    case Errc::InvalidBase: return "InvalidBase";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PatternLongerThanReference: return "PatternLongerThanReference";
    case Errc::LayoutInvalid: return "LayoutInvalid";
    case Errc::GammaOutOfRange: return "GammaOutOfRange";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::NoSolutions: return "NoSolutions";
    case Errc::SolutionsExceedSpace: return "SolutionsExceedSpace";
    case Errc::QueryTooLong: return "QueryTooLong";
    case Errc::QubitCeilingExceeded: return "QubitCeilingExceeded";
    case Errc::MaxRoundsExceeded: return "MaxRoundsExceeded";
    case Errc::InvalidParameters: return "InvalidParameters";
    }
    return "UnknownError";
}

} // namespace qpm
