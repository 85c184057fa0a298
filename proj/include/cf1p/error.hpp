#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cf1p {

// Raised for malformed input: bad tokens, unknown vertices, broken drawings,
// out-of-range arguments. `line()` is 0 when the error has no file position.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace cf1p
