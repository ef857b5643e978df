#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace delzant {

/// Domain error with a stable machine-readable code alongside the message.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace delzant
