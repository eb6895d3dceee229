#include "srf/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return srf::cli::run_cli(argc, argv, std::cout, std::cerr); }
