#include <iostream>

#include "braidcx/acceptance.hpp"

int main() {
  bool all = true;
  braidcx::run_acceptance({}, [&](const braidcx::CriterionResult& r) {
    std::cout << r.line() << std::endl;
    all = all && r.passed;
  });
  return all ? 0 : 1;
}
