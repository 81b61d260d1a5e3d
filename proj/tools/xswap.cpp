#include <iostream>

#include "xswap/cli/commands.hpp"

int main(int argc, char** argv) { return xswap::cli::run_cli(argc, argv, std::cout, std::cerr); }
