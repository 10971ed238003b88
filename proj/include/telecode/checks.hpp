#pragma once

#include <string>
#include <vector>

namespace telecode {

struct Check {
  std::string name;
  std::string ref;  // short tag of the identity being checked
  double residual = 0.0;
  double threshold = 0.0;
  bool pass() const { return residual <= threshold; }
};

class CheckList {
 public:
  void add(std::string name, std::string ref, double residual, double threshold) {
    checks_.push_back({std::move(name), std::move(ref), residual, threshold});
  }
  void append(const CheckList& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }
  const std::vector<Check>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.pass() ? 0 : 1;
    return n;
  }
  bool all_pass() const { return failures() == 0; }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks_) m = c.residual > m ? c.residual : m;
    return m;
  }
  std::vector<std::string> failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
      if (!c.pass()) out.push_back(c.name);
    return out;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace telecode
