#include <iostream>
#include <string>
#include <vector>

#include "qgr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qgr::run_cli(std::move(args), std::cout, std::cerr);
}
