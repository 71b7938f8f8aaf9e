#pragma once

#include <stdexcept>
#include <string>

namespace qce {

// Error taxonomy mirrored by the C API status codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        invalid_argument,
        parse,
        validation,
        io,
        numeric,
    };

    Error(Kind kind, std::string msg, int line = 0)
        : std::runtime_error(std::move(msg)), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    // 1-based source line for parse errors, 0 otherwise.
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
    throw Error(Error::Kind::invalid_argument, msg);
}

}  // namespace qce
