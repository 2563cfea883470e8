#include <iostream>

#include "ddseries/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ddseries::cli::run(args, std::cout, std::cerr);
}
