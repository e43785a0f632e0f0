#include <iostream>
#include <string>
#include <vector>

#include "z2cb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return z2cb::cli::run(args, std::cout, std::cerr);
}
