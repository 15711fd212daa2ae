#include <iostream>

#include "mcsreason/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcsreason::cli::run_subcommand(args, std::cout, std::cerr);
}
