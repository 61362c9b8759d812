#include <iostream>

#include "conway/cli.hpp"

int main(int argc, char** argv) {
  return conway::cli::run(argc, argv, std::cout, std::cerr);
}
