#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lexical or syntax error in textual input; `position()` is a byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string &message, std::size_t position)
        : Error(message + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace rekit
