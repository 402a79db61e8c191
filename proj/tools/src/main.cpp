#include <iostream>

#include "acq_cli/cli.hpp"

int main(int argc, char** argv) {
  return acq::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
