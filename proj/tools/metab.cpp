#include <iostream>
#include <string>
#include <vector>

#include "metab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return metab::cli::main(args, std::cout, std::cerr);
}
