#include <iostream>

#include "abelcycles/cli.hpp"

int main(int argc, char **argv) {
  abelcycles::RunConfig cfg;
  if (auto code = abelcycles::parse_command_line(argc, argv, cfg, std::cout, std::cerr))
    return *code;
  return abelcycles::run(cfg, std::cout, std::cerr);
}
