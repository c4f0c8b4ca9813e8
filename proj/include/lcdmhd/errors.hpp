#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace lcdmhd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run parameters, unknown names, malformed config.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A state left the admissible set (non-positive density or pressure,
/// non-finite values). Carries the offending value and, when raised from
/// inside a grid sweep, the interior cell index.
class AdmissibilityError : public Error {
 public:
  struct Cell {
    int j;
    int k;
  };

  AdmissibilityError(std::string quantity, double value,
                     std::optional<Cell> cell = std::nullopt);

  const std::string& quantity() const noexcept { return quantity_; }
  double value() const noexcept { return value_; }
  const std::optional<Cell>& cell() const noexcept { return cell_; }

  AdmissibilityError at(int j, int k) const;

 private:
  std::string quantity_;
  double value_;
  std::optional<Cell> cell_;
};

/// Time step collapsed below the configured floor.
class UnstableRunError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcdmhd
