#include <iostream>
#include <string>
#include <vector>

#include "tamp1d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tamp1d::run_command(args, std::cout, std::cerr);
}
