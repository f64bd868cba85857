#pragma once

#include <string>
#include <vector>

namespace cdecomp {

/// One evaluated necessary condition. `inequality` is the instantiated
/// relation, e.g. "max c_i = 4 <= 6 - 5 + 2 = 3".
struct ConditionItem {
  std::string name;  // B1..B4, C1, C1', C2..C4
  bool pass = true;
  bool applicable = true;
  std::string inequality;
};

struct ConditionReport {
  std::vector<ConditionItem> items;

  bool passed() const;
  const ConditionItem& item(const std::string& name) const;
};

/// Necessary conditions B1-B4 for a (c_1..c_k)-decomposition of mu*K_n.
ConditionReport check_complete_conditions(int mu, int n, const std::vector<int>& lengths);

/// Necessary conditions C1, C1', C2-C4 for lambda*K_{n x m}.
ConditionReport check_equipartite_conditions(int lambda, int m, int n, const std::vector<int>& lengths);

}  // namespace cdecomp
