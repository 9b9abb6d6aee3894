#include <iostream>
#include <string>
#include <vector>

#include "wproj_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wproj::cli::execute(args, std::cout, std::cerr);
}
