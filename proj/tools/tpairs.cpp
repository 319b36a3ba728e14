#include <iostream>

#include "tpairs/cli.hpp"

int main(int argc, char** argv) {
  return tpairs::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
