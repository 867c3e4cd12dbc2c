#pragma once

#include <stdexcept>
#include <string>

namespace ilac {

// Invalid configuration or scenario input. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ilac
