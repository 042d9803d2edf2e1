#pragma once

#include <stdexcept>
#include <string>

namespace occ132 {

enum class ErrorCode {
    invalid_argument = 1,
    guard_violation,
    io,
    format,
    missing_shapes,
    math,
    // Structural assertions that can only fail through an implementation bug.
    order_violation,
    structure_violation,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace occ132
