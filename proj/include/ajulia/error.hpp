#pragma once

#include <stdexcept>
#include <string>

namespace ajulia {

enum class ErrorKind {
    NotPrime,
    NotMonic,
    DegreeTooLow,
    ZeroPolynomial,
    ViewTooLarge,
    IoFailure,
    Parse,
    InvalidArgument,
};

/// Exception type thrown by every engine operation. The kind drives the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ajulia
