#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpow {

/// Binary operation on objects living in different polynomial rings.
class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("ambient mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search was refused because the instance exceeds a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t size, std::size_t cap)
      : std::runtime_error("generator count " + std::to_string(size) +
                           " exceeds search cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// Malformed textual input. `offset()` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline void check_ambient(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw AmbientMismatch(lhs, rhs);
}

}  // namespace bpow
