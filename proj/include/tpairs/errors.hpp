#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpairs {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: table dimensions, out-of-range indices, empty hypersums.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Unknown names or unsupported option combinations.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An operation was called on input that does not meet its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Something that must be well defined turned out not to be.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A search or enumeration would exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Three-valued verdict for bounded searches on infinite carriers.
enum class Truth { no, yes, unknown };

constexpr Truth truth(bool b) noexcept { return b ? Truth::yes : Truth::no; }

constexpr std::string_view to_string(Truth t) noexcept {
  switch (t) {
    case Truth::no:
      return "false";
    case Truth::yes:
      return "true";
    case Truth::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace tpairs
