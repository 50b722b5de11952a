#pragma once

#include <stdexcept>
#include <string>

namespace pomine {

// Malformed input text: episode grammar violations, bad event lines, bad numbers.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid data: relation not a partial order, out-of-order ticks,
// violated API preconditions.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem trouble: missing files, unwritable outputs.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pomine
