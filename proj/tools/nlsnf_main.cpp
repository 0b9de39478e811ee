#include <iostream>
#include <string>
#include <vector>

#include "nlsnf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nlsnf::cli::dispatch(args, std::cout, std::cerr);
}
