#ifndef TWISTDER_ERROR_HPP
#define TWISTDER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace twistder {

// Base class for all library errors (bad input, singular matrices, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression / problem-file syntax error with a position.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace twistder

#endif
