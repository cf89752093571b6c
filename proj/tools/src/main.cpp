#include <iostream>

#include "beltca_cli/cli.hpp"

int main(int argc, char** argv) { return beltca::cli::run_cli(argc, argv, std::cout, std::cerr); }
