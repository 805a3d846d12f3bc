#include "h10/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return h10::cli::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
