#include "jacobi/error.hpp"

namespace jacobi {

std::string_view code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidDiagram: return "invalid_diagram";
    case ErrorCode::SpaceMismatch: return "space_mismatch";
    case ErrorCode::GradingMismatch: return "grading_mismatch";
    case ErrorCode::ResourceLimit: return "resource_limit";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::LieValidation: return "lie_validation";
    case ErrorCode::SingularMetric: return "singular_metric";
    case ErrorCode::Io: return "io_error";
    }
    return "unknown";
}

} // namespace jacobi
