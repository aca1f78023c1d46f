#pragma once

#include <stdexcept>
#include <string>

namespace termnb {

// Base error for all library failures. `where` names the stage or file
// that produced the error so CLI output can point at the culprit.
class Error : public std::runtime_error {
public:
    Error(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what),
          where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what, long line = -1)
        : Error(std::move(where),
                line >= 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

class TrainError : public Error {
public:
    using Error::Error;
};

} // namespace termnb
