#ifndef UAVPSO_ERRORS_HPP
#define UAVPSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uavpso {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct EndpointMismatch : Error {
    using Error::Error;
};

/// Malformed scenario-file line. line == 0 means a file-level problem
/// (e.g. a required key is missing entirely).
struct SyntaxError : Error {
    SyntaxError(int line_no, const std::string& message)
        : Error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
    int line;
};

struct DuplicateKey : Error {
    DuplicateKey(int line_no, const std::string& key)
        : Error("line " + std::to_string(line_no) + ": duplicate key '" + key + "'"),
          line(line_no) {}
    int line;
};

struct ValidationError : Error {
    using Error::Error;
};

struct StartBlocked : Error {
    using Error::Error;
};

struct GoalBlocked : Error {
    using Error::Error;
};

struct NoPath : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

struct EmptyHistory : Error {
    using Error::Error;
};

}  // namespace uavpso

#endif
