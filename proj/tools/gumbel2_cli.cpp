#include <iostream>

#include "gumbel2/cli.hpp"

int main(int argc, char** argv) { return gumbel2::run_cli(argc, argv, std::cout, std::cerr); }
