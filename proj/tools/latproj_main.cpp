#include <iostream>
#include <string>
#include <vector>

#include "latproj/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latproj::cli::run(args, std::cout, std::cerr);
}
