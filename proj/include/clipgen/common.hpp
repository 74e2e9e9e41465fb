#pragma once

#include <stdexcept>
#include <string>

namespace clipgen {

// Error taxonomy. Everything user-facing derives from Error so the CLI can
// map exceptions to exit codes (UsageError -> 2, the rest -> 1).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct StateError : Error {
    using Error::Error;
};
struct NumericError : Error {
    using Error::Error;
};
struct VocabError : Error {
    using Error::Error;
};
struct EmptyTextError : Error {
    using Error::Error;
};
struct TokenError : Error {
    using Error::Error;
};
struct BatchError : Error {
    using Error::Error;
};
struct StageError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct BadMagicError : IoError {
    using IoError::IoError;
};
struct BadVersionError : IoError {
    using IoError::IoError;
};
struct CrcError : IoError {
    using IoError::IoError;
};
struct UsageError : Error {
    using Error::Error;
};

}  // namespace clipgen
