#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quotcone {

enum class ErrorKind {
    DegenerateInput,
    ShapeError,
    ParamError,
    UnsupportedRegime,
    EmptyRay,
    DegenerateCone,
    NotUnital,
    NotInjective,
    NotSurjective,
    DirectrixUndefined,
    GenericityFailure,
    Underdetermined,
    Inconsistent,
    FieldMismatch,
    ParseError,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI's exit-code mapping) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace quotcone
