#include <iostream>
#include <vector>

#include "powerdiam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return powerdiam::run_cli(args, std::cout, std::cerr);
}
