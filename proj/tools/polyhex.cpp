#include "polyhex/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return polyhex::cli::run(argc, argv, std::cout, std::cerr); }
