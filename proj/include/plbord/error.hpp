#pragma once

#include <stdexcept>
#include <string>

namespace plbord {

// All recoverable failures are thrown as plbord::Error. `kind` is a stable
// machine-readable tag; `what()` carries the human-readable message with a
// witness where available.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace plbord
