#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobi {

enum class ErrorCode {
    InvalidDiagram,
    SpaceMismatch,
    GradingMismatch,
    ResourceLimit,
    InvalidArgument,
    MalformedInput,
    LieValidation,
    SingularMetric,
    Io,
};

/// Stable machine-readable name for an error code ("invalid_diagram", ...).
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace jacobi
