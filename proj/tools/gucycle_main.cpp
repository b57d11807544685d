#include <iostream>

#include "gucycle/cli.hpp"

int main(int argc, char** argv) {
  return gucycle::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
