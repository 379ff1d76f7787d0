#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lirg {

/// A requested object would exceed a configured size bound.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Malformed input file or text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The decomposition procedure met a state that no graph automorphism can
/// produce.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lirg
