// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>

#include "corpus.hpp"

int main() {
  const auto results = gaussfano::corpus::run();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%.3f s) %s\n", r.passed ? "PASS" : "FAIL", r.criterion, r.name.c_str(), r.seconds,
                r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
