#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopblocks {

enum class ErrorKind {
    InvalidType,
    RankMismatch,
    NonDominant,
    NoSuchAutomorphism,
    FixedNodeSupport,
    ParityViolation,
    MalformedTwisted,
    InvalidCoordinate,
    ParseError,
    Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that front ends can
// map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidType:
        return "InvalidType";
    case ErrorKind::RankMismatch:
        return "RankMismatch";
    case ErrorKind::NonDominant:
        return "NonDominant";
    case ErrorKind::NoSuchAutomorphism:
        return "NoSuchAutomorphism";
    case ErrorKind::FixedNodeSupport:
        return "FixedNodeSupport";
    case ErrorKind::ParityViolation:
        return "ParityViolation";
    case ErrorKind::MalformedTwisted:
        return "MalformedTwisted";
    case ErrorKind::InvalidCoordinate:
        return "InvalidCoordinate";
    case ErrorKind::ParseError:
        return "ParseError";
    case ErrorKind::Overflow:
        return "Overflow";
    }
    return "Unknown";
}

} // namespace loopblocks
