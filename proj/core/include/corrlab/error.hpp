#pragma once

#include <stdexcept>
#include <string>

namespace corrlab {

// Failure categories. The CLI maps them to exit codes:
// invalid_input -> 4, certificate_failure -> 2, infeasible -> 3.
enum class ErrorKind { invalid_input, certificate_failure, infeasible };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
    throw Error(ErrorKind::invalid_input, msg);
}

[[noreturn]] inline void fail_certificate(const std::string& msg) {
    throw Error(ErrorKind::certificate_failure, msg);
}

[[noreturn]] inline void fail_infeasible(const std::string& msg) {
    throw Error(ErrorKind::infeasible, msg);
}

} // namespace corrlab
