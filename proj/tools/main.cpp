#include <iostream>
#include <string>
#include <vector>

#include "vira_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vira::cli::run(args, std::cout, std::cerr);
}
