#pragma once

#include <stdexcept>
#include <string>

namespace compdist {

/// Raised when a request exceeds a configured resource guard (enumeration
/// cap, big-integer cap, series term limit).  The CLI maps this to exit
/// code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal cross-check fails (a value recomputed at emission
/// does not match the stored one, a certified bound is violated, ...).
/// The CLI maps this to exit code 4.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace compdist
