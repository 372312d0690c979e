#pragma once

#include <string>
#include <vector>

namespace pla {

struct PaperCheckResult {
  std::string id;
  std::string anchor;  // paper location the check reproduces
  std::string description;
  bool pass = false;
  std::string detail;  // failure explanation when !pass
};

// Reruns every fixture check in the catalog. All comparisons are exact.
std::vector<PaperCheckResult> run_paper_suite(unsigned threads = 1);

}  // namespace pla
