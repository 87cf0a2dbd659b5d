#include <iostream>

#include "eispart/cli.hpp"

int main(int argc, char** argv) {
  return eispart::cli::run(argc, argv, std::cout, std::cerr);
}
