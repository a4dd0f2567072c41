#pragma once

#include <stdexcept>
#include <string>

namespace qpm {

enum class Errc {
    QubitCountOutOfRange,
    InvalidQubitIndex,
    DuplicateQubitIndex,
    NonUnitaryMatrix,
    ZeroShots,
    UnsupportedOpForSerialization,
    SyntaxError,
    UnknownGate,
    QubitOutOfRange,
    MissingHeader,
    QubitCountMismatch,
    InvalidBase,
    LengthMismatch,
    PatternLongerThanReference,
    LayoutInvalid,
    GammaOutOfRange,
    DimensionTooLarge,
    NoSolutions,
    SolutionsExceedSpace,
    QueryTooLong,
    QubitCeilingExceeded,
    MaxRoundsExceeded,
    InvalidParameters,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Raised by the text-format parser; line is 1-based.
class ParseError : public Error {
public:
    ParseError(Errc code, int line, const std::string& message)
        : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace qpm
