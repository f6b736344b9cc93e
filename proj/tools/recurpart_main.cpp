#include "recurpart/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return recurpart::run_command(argc, argv, std::cout, std::cerr);
}
