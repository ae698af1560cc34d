#include <iostream>

#include "mvml/cli.hpp"

int main(int argc, char** argv) {
  return mvml::run_cli(argc, argv, std::cout, std::cerr);
}
