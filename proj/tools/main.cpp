#include <iostream>

#include "geodissect/cli.hpp"

int main(int argc, char** argv) {
  return geodissect::run_cli(argc, argv, std::cout, std::cerr);
}
