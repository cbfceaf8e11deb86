#pragma once

#include <stdexcept>
#include <string>

namespace weylref {

// Malformed input or a violated precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computation routes disagreed or an invariant failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured enumeration bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace weylref
