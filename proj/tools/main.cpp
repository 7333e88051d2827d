#include <iostream>
#include <string>
#include <vector>

#include "gprod/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gprod::cli::run(args, std::cout, std::cerr);
}
