#pragma once

#include <stdexcept>
#include <string>

namespace eucstruct {

// A computed object failed a structural cross-check that the library's own
// constructions guarantee; seeing one of these means a bug, not bad input.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Input satisfies the basic domain checks but is degenerate for the requested
// operation (e.g. a parity adjustment that would produce a zero quotient).
class degenerate_error : public std::domain_error {
 public:
  explicit degenerate_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace eucstruct
