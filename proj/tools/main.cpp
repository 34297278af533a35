#include <iostream>
#include <string>
#include <vector>

#include "reebsym/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return reebsym::run_cli(args, std::cout, std::cerr);
}
