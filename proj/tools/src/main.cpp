#include <iostream>
#include <string>
#include <vector>

#include "powertour_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return powertour::cli::run(args, std::cout, std::cerr);
}
