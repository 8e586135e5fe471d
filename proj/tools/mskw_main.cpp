#include <iostream>
#include <string>
#include <vector>

#include "mskw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mskw::run_cli(args, std::cout, std::cerr);
}
