#ifndef FINTOP_ERRORS_HPP
#define FINTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fintop {

// Input that violates a documented precondition (CLI exit code 2).
using input_error = std::invalid_argument;

// A configured node/time budget ran out before the answer was decided
// (CLI exit code 3). Never used to mask a wrong answer.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Malformed document, with a line number in the message (CLI exit code 2).
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A strategy or script produced an illegal game move.
class game_error : public std::runtime_error {
public:
    explicit game_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fintop

#endif
