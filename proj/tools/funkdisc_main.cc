#include <iostream>
#include <string>
#include <vector>

#include "funkdisc/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return funkdisc::run_cli(args, std::cout, std::cerr);
}
