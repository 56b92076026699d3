#include <iostream>
#include <string>
#include <vector>

#include "ritt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ritt::cli::run_command(std::move(args), std::cout, std::cerr);
}
