#pragma once

#include <stdexcept>
#include <string>

namespace slipsim {

enum class ErrorCode {
    DegenerateInput = 1,
    EmptyRaster,
    GraspOffBag,
    OutOfWorkspace,
    NoGraspHeld,
    NoBagVisible,
    ModeUnavailable,
    BracketCollapse,
    ConfigError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a stable error code; converted to a C status at the
/// library boundary.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace slipsim
