#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kantichain/errors.hpp"

namespace kantichain {

/// Pass/fail record of named checks.
class VerificationReport {
 public:
  struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
  };

  void add(std::string name, bool passed, std::string detail = {});

  /// One check named `name`, failing iff `failures` is non-empty. At most
  /// `max_listed` failures are spelled out in the detail.
  void add_all(std::string name, const std::vector<std::string>& failures,
               std::string ok_detail = {}, std::size_t max_listed = 8);

  bool passed() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;

  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

/// Carries a failed report out of an operation that required it to pass.
class VerificationError : public NumericalError {
 public:
  VerificationError(const std::string& what, VerificationReport report)
      : NumericalError(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

}  // namespace kantichain
