#pragma once

#include <stdexcept>
#include <string>

namespace rtx {

// Error taxonomy used across the project. Every throw site builds a message
// that names the offending operands (shapes, dimensions, offsets) so failures
// in a from-scratch stack are debuggable from the message alone.

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& m) : std::runtime_error(m) {}
};

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& m) : std::runtime_error(m) {}
};

struct IndexError : std::runtime_error {
  explicit IndexError(const std::string& m) : std::runtime_error(m) {}
};

struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& m) : std::runtime_error(m) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& m) : std::runtime_error(m) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace rtx
