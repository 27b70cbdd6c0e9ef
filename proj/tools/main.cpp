#include <iostream>
#include <string>
#include <vector>

#include "bandsweep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bandsweep::cli::run(args, std::cin, std::cout, std::cerr);
}
