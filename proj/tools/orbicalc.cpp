#include <iostream>

#include "orbicalc/cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = orbicalc::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << outcome.out << std::flush;
  std::cerr << outcome.err << std::flush;
  return outcome.status;
}
