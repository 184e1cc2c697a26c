#include "cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return pplab::cli::main_entry(argc, argv, std::cout, std::cerr);
}
