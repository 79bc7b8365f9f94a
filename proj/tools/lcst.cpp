#include <iostream>
#include <string>
#include <vector>

#include "lcst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcst::run(args, std::cout, std::cerr);
}
