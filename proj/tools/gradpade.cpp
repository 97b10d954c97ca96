#include <iostream>

#include "gradpade/cli.hpp"

int main(int argc, char** argv) {
  return gradpade::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
