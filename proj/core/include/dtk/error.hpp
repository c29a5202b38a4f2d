#pragma once

#include <stdexcept>
#include <string>

namespace dtk {

/// Bad input from a caller, a file, or the command line. CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap was exceeded.
class CapExceeded : public InputError {
public:
  explicit CapExceeded(const std::string& what) : InputError(what) {}
};

/// An exact identity that must hold by construction failed. CLI exit code 1.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dtk
