#include <iostream>
#include <string>
#include <vector>

#include "i3rab/cli/command.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return i3rab::cli::run_command(args, std::cout, std::cerr);
}
