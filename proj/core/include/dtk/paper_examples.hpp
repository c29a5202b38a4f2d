#pragma once

#include <string>
#include <vector>

namespace dtk {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

/// The worked examples of the three built-in semidirect-product groups:
/// labeled character families, the sigma/tau pairings and orbit counts, and
/// the explicit conjugation-transport identity of the order-81 group.
std::vector<CheckResult> verify_paper_ex1();
std::vector<CheckResult> verify_paper_ex2();
std::vector<CheckResult> verify_paper_ex3(unsigned jobs = 1);
std::vector<CheckResult> verify_paper_examples(unsigned jobs = 1);

}  // namespace dtk
