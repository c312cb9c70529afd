#ifndef SEMIWAVE_ERRORS_HPP
#define SEMIWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiwave {

// Status codes shared with the C API and the CLI exit codes.
enum class Status : int {
    Ok = 0,
    NumericFailure = 1,
    ConfigError = 2,
    ResourceError = 3,
    InvalidArgument = 4,
    Unsupported = 5,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& msg)
        : std::runtime_error(msg), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void throw_numeric(const std::string& msg) {
    throw Error(Status::NumericFailure, msg);
}
[[noreturn]] inline void throw_config(const std::string& msg) {
    throw Error(Status::ConfigError, msg);
}
[[noreturn]] inline void throw_resource(const std::string& msg) {
    throw Error(Status::ResourceError, msg);
}
[[noreturn]] inline void throw_invalid(const std::string& msg) {
    throw Error(Status::InvalidArgument, msg);
}
[[noreturn]] inline void throw_unsupported(const std::string& msg) {
    throw Error(Status::Unsupported, msg);
}

} // namespace semiwave

#endif
