#pragma once

#include <stdexcept>
#include <string>

namespace mhw {

// Thrown when an operation would exceed its configured memory budget
// (solver residue bound, sieve limit cap). Carries a sizing hint so
// callers can report what to raise.
class SizingError : public std::runtime_error {
 public:
  explicit SizingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mhw
