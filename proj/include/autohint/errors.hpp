#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace autohint {

/// Bad configuration: config files, CLI flags, template resources.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad data: task files, datasets, domain-level precondition violations.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Provider failure. `transient` failures are eligible for retry;
/// content refusals and malformed responses are not.
class ProviderError : public std::runtime_error {
 public:
  ProviderError(const std::string& msg, bool transient_failure)
      : std::runtime_error(msg), transient(transient_failure) {}
  bool transient;
};

/// Non-fatal diagnostics (shortfalls, dropped samples, leak flags) go through
/// this hook. Default sink writes "[warn] ..." to stderr; tests may capture.
void emit_warning(const std::string& message);
void set_warning_handler(std::function<void(const std::string&)> handler);
void reset_warning_handler();

}  // namespace autohint
