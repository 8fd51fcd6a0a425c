#include <iostream>

#include "spanconfig/cli.hpp"

int main(int argc, char** argv) {
  return spanconfig::cli_main(argc, argv, std::cout, std::cerr);
}
