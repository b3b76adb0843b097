#pragma once

#include <stdexcept>
#include <string>

namespace a2zeta {

enum class ErrorKind {
    Parse,
    IndexOutOfRange,
    ValidationFailure,
    UnsupportedOrder,
    PresentationInvalid,
    SingularInput,
    BallTooSmall,
    ResourceLimit,
    DegreeTooLow,
    NotRegular,
    RootFindingFailure,
    NotAGallery,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every recoverable failure in the library; the
/// kind distinguishes input errors from failed mathematical preconditions.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace a2zeta
