#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqlab {

enum class ErrorKind {
    NotPrime,
    EvenPrime,
    CapExceeded,
    DivisionByZero,
    NotCoprime,
    LengthMismatch,
    ParamDomain,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every precondition failure in the library surfaces as an Error carrying its kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fqlab
