#pragma once

#include <stdexcept>
#include <string>

namespace wchain {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ledger
struct SeqGapError : Error { using Error::Error; };
struct ParentMismatchError : Error { using Error::Error; };
struct UnknownCoordinateError : Error { using Error::Error; };

// merkle
struct IndexOutOfRangeError : Error { using Error::Error; };

// consensus
struct InvalidFError : Error { using Error::Error; };

// persistence / trace
struct IoError : Error { using Error::Error; };
struct CorruptFileError : Error { using Error::Error; };
struct MalformedTraceError : Error { using Error::Error; };

// configuration
struct ConfigError : Error { using Error::Error; };

struct ParseError : ConfigError {
    ParseError(const std::string& msg, size_t line_no)
        : ConfigError(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    size_t line;
};

struct ConstraintViolation : ConfigError {
    ConstraintViolation(const std::string& msg, std::string field_name)
        : ConfigError(msg), field(std::move(field_name)) {}
    std::string field;
};

} // namespace wchain
