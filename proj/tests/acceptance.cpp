// Acceptance runner: executes every self-check suite and prints one PASS/FAIL
// line per criterion. Exits nonzero if anything fails. The same checks back
// `eispart verify`.
#include <iostream>

#include "eispart/verify.hpp"

int main() {
  std::vector<eispart::verify::CheckResult> results = eispart::verify::run_all();
  int failures = eispart::verify::report(results, std::cout);
  return failures == 0 ? 0 : 1;
}
