#include <iostream>

#include "app/cli.hpp"

int main(int argc, char** argv) {
  return frbf::app::run(argc, argv, std::cout, std::cerr);
}
