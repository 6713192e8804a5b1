#ifndef STAIRCASE_ERROR_HPP
#define STAIRCASE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace staircase {

enum class ErrorKind {
    InvalidPartition,
    ShiftedOfNonStrict,
    CellOutOfShape,
    NotContained,
    OutOfRange,
    OutOfDomain,
    InternalMismatch,
    EmptyShape,
    NotA132Network,
    WrongShape,
    MaxEntryTooFarLeft,
    NotLipschitz,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI, the Python bindings) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace staircase

#endif  // STAIRCASE_ERROR_HPP
