#include <iostream>
#include <string>
#include <vector>

#include "hbt/cli.hpp"

int main(int argc, char** argv) {
  return hbt::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
