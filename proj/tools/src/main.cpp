#include <iostream>
#include <string>
#include <vector>

#include "ringstar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ringstar::cli::execute(args, std::cout, std::cerr);
}
