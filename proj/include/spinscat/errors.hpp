#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinscat {

/// Bad user-supplied configuration (grid/layout/schema problems). CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file; carries the byte offset where parsing failed.
class IngestError : public std::runtime_error {
public:
    IngestError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

/// Time marching produced a non-finite or runaway lattice. CLI exit code 3.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& msg, long step_index, const std::string& region_name)
        : std::runtime_error(msg + " at step " + std::to_string(step_index) +
                             " in region " + region_name),
          step(step_index), region(region_name) {}
    long step;
    std::string region;
};

/// Numeric procedure failed to reach its requested tolerance. CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spinscat
