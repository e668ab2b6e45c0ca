#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "psiprime/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bool styled = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return psiprime::cli::run(args, std::cout, std::cerr, styled);
}
