// Command-line driver; all behaviour lives in ptd::cli_main so that the
// test suite can exercise the same code paths in-process.

#include <iostream>
#include <string>
#include <vector>

#include "ptd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptd::cli_main(args, std::cout, std::cerr);
}
