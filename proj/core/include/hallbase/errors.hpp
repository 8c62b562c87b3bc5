#pragma once

#include <stdexcept>
#include <string>

namespace hallbase {

/// Malformed or invalid user input (bad JSON, non-Dynkin quiver, unknown vertex).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed: interpolation mismatch at a held-out
/// prime, non-unique generic extension, cross-prime disagreement and so on.
/// Any occurrence means a bug or a violated theoretical guarantee.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured enumeration or size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void verify(bool condition, const std::string& what) {
  if (!condition) throw VerificationError(what);
}

}  // namespace hallbase
