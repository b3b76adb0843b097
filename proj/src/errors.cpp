#include "a2zeta/errors.hpp"

namespace a2zeta {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::PresentationInvalid: return "PresentationInvalid";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::BallTooSmall: return "BallTooSmall";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::NotAGallery: return "NotAGallery";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace a2zeta
