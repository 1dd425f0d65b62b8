#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a1 {

// Parse failure in one of the external text formats. `offset` is the
// byte position in the input at which the error was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace a1
