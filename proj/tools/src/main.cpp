#include <iostream>

#include "rvnorm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rvnorm::cli::run(args, std::cout, std::cerr);
}
