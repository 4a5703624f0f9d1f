#include <iostream>

#include "ggl/cli.hpp"

int main(int argc, char** argv) {
  return ggl::cli::run(argc, argv, std::cout, std::cerr);
}
