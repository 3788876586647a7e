#pragma once

#include <stdexcept>
#include <string>

namespace infex {

// Error raised while reading resource or record files. Carries the
// offending line number when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(const std::string& origin, int line, const std::string& msg)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

// Unusable configuration: missing resource files, unknown keys, bad values.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace infex
