#include <iostream>

#include "eikonal/cli.hpp"

int main(int argc, char** argv) {
  return eikonal::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
