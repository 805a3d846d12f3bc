#include "h10/verify/suite.hpp"

#include <cstdio>

int main() {
  const h10::SuiteReport rep = h10::run_suite();
  for (const auto& r : rep.results) {
    std::printf("%s  %2d  %-50s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.elapsed,
                r.pass ? r.detail.c_str() : r.counterexample->c_str());
  }
  std::printf("%s\n", rep.all_pass() ? "all criteria pass" : "some criteria fail");
  return rep.all_pass() ? 0 : 1;
}
