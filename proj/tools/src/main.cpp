#include "rooftop/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rooftop::cli::run(args, std::cout, std::cerr);
}
