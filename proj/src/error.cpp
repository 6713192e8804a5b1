#include "staircase/error.hpp"

namespace staircase {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::ShiftedOfNonStrict: return "ShiftedOfNonStrict";
    case ErrorKind::CellOutOfShape: return "CellOutOfShape";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::EmptyShape: return "EmptyShape";
    case ErrorKind::NotA132Network: return "NotA132Network";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::MaxEntryTooFarLeft: return "MaxEntryTooFarLeft";
    case ErrorKind::NotLipschitz: return "NotLipschitz";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace staircase
