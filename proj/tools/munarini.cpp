#include <iostream>

#include "munarini/cli.hpp"

int main(int argc, char** argv) {
  return munarini::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
