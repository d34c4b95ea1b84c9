#include <iostream>

#include "itw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return itw::cli::run(args, std::cout, std::cerr);
}
