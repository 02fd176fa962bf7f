#include "kantichain/report.hpp"

#include <algorithm>

namespace kantichain {

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::add_all(std::string name, const std::vector<std::string>& failures,
                                 std::string ok_detail, std::size_t max_listed) {
  if (failures.empty()) {
    add(std::move(name), true, std::move(ok_detail));
    return;
  }
  std::string detail = std::to_string(failures.size()) + " failure(s): ";
  for (std::size_t i = 0; i < failures.size() && i < max_listed; ++i) {
    if (i > 0) detail += "; ";
    detail += failures[i];
  }
  if (failures.size() > max_listed) detail += "; ...";
  add(std::move(name), false, std::move(detail));
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const VerificationReport::Check* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"passed", passed()}, {"checks", std::move(checks)}};
}

}  // namespace kantichain
