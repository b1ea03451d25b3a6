#include <iostream>
#include <string>
#include <vector>

#include "liebialg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liebialg::cli::run(args, std::cout, std::cerr);
}
