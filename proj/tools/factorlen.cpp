#include <iostream>

#include "factorlen/cli.hpp"

int main(int argc, char** argv) {
  return factorlen::cli::run(argc, argv, std::cout, std::cerr);
}
