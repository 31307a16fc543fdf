#include "cwk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cwk::runCli(args, std::cout, std::cerr);
}
