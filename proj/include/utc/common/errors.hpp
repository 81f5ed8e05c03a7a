#pragma once

#include <stdexcept>
#include <string>

namespace utc {

// Bad flags / unknown ids. CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent scenario/config input, detected before an episode starts. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime invariant (conservation, collision-freedom, finite loss) broke mid-run.
// Episodes are aborted and reported, never silently dropped. CLI exit code 3.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace utc
