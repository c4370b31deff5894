#include <iostream>
#include <string>
#include <vector>

#include "bruhat/cli.hpp"

int main(int argc, char** argv) {
  return bruhat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
