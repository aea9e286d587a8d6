#include <iostream>
#include <string>
#include <vector>

#include "rank2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rank2::cli::run(args, std::cout, std::cerr);
}
