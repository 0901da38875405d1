#include <iostream>

#include "lierep_cli.hpp"

int main(int argc, char** argv) {
  return lierep::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
