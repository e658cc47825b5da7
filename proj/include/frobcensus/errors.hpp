#ifndef FROBCENSUS_ERRORS_HPP
#define FROBCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobcensus {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-domain input (CLI exit code 2).
class invalid_input_error : public error {
public:
    explicit invalid_input_error(const std::string& msg) : error(msg) {}
};

/// Input exceeds a configured resource bound (CLI exit code 3).
class capacity_error : public error {
public:
    explicit capacity_error(const std::string& msg) : error(msg) {}
};

/// A mathematical invariant failed; signals a bug, not bad input (CLI exit code 4).
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace frobcensus

#endif
