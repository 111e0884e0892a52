#include <iostream>

#include "mtlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mtlab::command_dispatch(args, std::cout, std::cerr);
}
