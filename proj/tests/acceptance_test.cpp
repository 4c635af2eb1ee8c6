// Certification gate: one line per criterion, nonzero exit on any failure.
#include "specgap/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  auto results = specgap::run_acceptance(quick);
  bool all = true;
  for (const auto& res : results) {
    std::cout << (res.pass ? "PASS" : "FAIL") << "  criterion " << res.id << ": " << res.name;
    if (!res.pass && !res.detail.empty()) std::cout << "  [" << res.detail << "]";
    std::cout << std::endl;
    all = all && res.pass;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
