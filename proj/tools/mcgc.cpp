#include <iostream>
#include <string>
#include <vector>

#include "mcgc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcgc::dispatch(args, std::cout, std::cerr);
}
