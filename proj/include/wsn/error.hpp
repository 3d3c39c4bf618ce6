#pragma once

#include <stdexcept>
#include <string>

namespace wsn {

/// Invalid scenario or configuration value. `field()` is the user-facing key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error("invalid '" + field + "': " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace wsn
