#include <iostream>

#include "framelex/cli.h"

int main(int argc, char** argv) {
  return framelex::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
