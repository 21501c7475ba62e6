#include <iostream>

#include "lieaid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lieaid::cli::run(args, std::cout, std::cerr);
}
