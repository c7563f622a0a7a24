#include <iostream>
#include <vector>

#include "clumpstat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return clumpstat::run_cli(args, std::cout, std::cerr);
}
