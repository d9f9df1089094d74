#include <iostream>
#include <string>
#include <vector>

#include "suslib/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return sus::cli::run(args, std::cout, std::cerr);
}
