#include <iostream>
#include <string>
#include <vector>

#include "twistrim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twistrim::cli::run(args, std::cout, std::cerr);
}
