#include <iostream>
#include <string>
#include <vector>

#include "lgc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lgc::RunCommand(args, std::cout, std::cerr);
}
