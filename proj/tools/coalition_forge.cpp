#include <iostream>
#include <string>
#include <vector>

#include "coalition_forge/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return coalition_forge::run_cli(args, std::cout, std::cerr);
}
