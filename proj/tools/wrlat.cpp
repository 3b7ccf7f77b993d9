#include <iostream>
#include <string>
#include <vector>

#include "wrl/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return wrl::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
