#include <iostream>

#include "szegolab/cli.hpp"

int main(int argc, char** argv) {
  return szegolab::cli::main_entry(argc, argv, std::cout, std::cerr);
}
