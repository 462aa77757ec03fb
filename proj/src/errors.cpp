#include "slipsim/errors.hpp"

namespace slipsim {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::EmptyRaster: return "EmptyRaster";
        case ErrorCode::GraspOffBag: return "GraspOffBag";
        case ErrorCode::OutOfWorkspace: return "OutOfWorkspace";
        case ErrorCode::NoGraspHeld: return "NoGraspHeld";
        case ErrorCode::NoBagVisible: return "NoBagVisible";
        case ErrorCode::ModeUnavailable: return "ModeUnavailable";
        case ErrorCode::BracketCollapse: return "BracketCollapse";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace slipsim
