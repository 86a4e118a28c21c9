#pragma once

#include <stdexcept>
#include <string>

namespace pgb {

// Mathematical precondition failures. `kind()` is the short error name the
// CLI reports on stderr, e.g. "division by zero" or "index divisor".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& detail = {})
      : std::runtime_error(detail.empty() ? kind : kind + ": " + detail),
        kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgb
