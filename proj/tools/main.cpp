#include <iostream>

#include "eqk/cli.hpp"

int main(int argc, char** argv) {
  return eqk::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
