#include <iostream>
#include <string>
#include <vector>

#include "hornlr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hornlr::run(args, std::cout, std::cerr);
}
