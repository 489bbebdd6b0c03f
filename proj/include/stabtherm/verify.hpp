#pragma once

#include <string>
#include <vector>

namespace stabtherm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Enumeration oracle vs closed forms: s1..s4 and canonical at k in {1,2},
// line/star at N in {3,9}, six temperatures, 1e-9 relative on
// <M~>, <M^2>, chi and E.
std::vector<CheckResult> verify_oracle_vs_closed();

// Disentangler structure: trees/tree-like graphs up to k = 6 reduce to
// singletons (+ one pair per sibling bond, root unsupported); canonical up
// to k = 4 maps stabilizer elements to distinct singletons and the all-spin
// product to the root; effective distances match the symbolic counts at
// k <= 3.
std::vector<CheckResult> verify_transforms();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace stabtherm
