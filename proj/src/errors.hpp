#pragma once

#include <stdexcept>
#include <string>

namespace crossmin {

enum class ErrorCode {
    InvalidArgument,
    Structure,
    Parse,
    Io,
    Unsupported,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Internal consistency check that stays on in release builds. These guard
// invariants of the planarization machinery; a failure indicates a bug, not
// bad user input.
inline void check(bool cond, const char* what) {
    if (!cond)
        throw Error(ErrorCode::Internal, std::string("internal invariant violated: ") + what);
}

} // namespace crossmin
