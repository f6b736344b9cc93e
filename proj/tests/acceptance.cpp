// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of failures.
#include "recurpart/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  recurpart::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) opt.full = true;
    else if (std::strcmp(argv[i], "--quick") == 0) opt.full = false;
  }
  std::cout << "acceptance tier: " << (opt.full ? "full" : "quick") << ", D = " << opt.digits
            << "\n";
  return recurpart::run_acceptance(opt, std::cout);
}
