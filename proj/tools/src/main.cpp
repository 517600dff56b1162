#include <iostream>
#include <string>
#include <vector>

#include "afd/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return afd::cli::run(args, std::cout, std::cerr);
}
