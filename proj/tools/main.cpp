#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "tropvis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  for (const auto& a : args) {
    if (a == "-") {
      input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      break;
    }
  }
  return tropvis::run_cli(args, std::cout, std::cerr, input);
}
