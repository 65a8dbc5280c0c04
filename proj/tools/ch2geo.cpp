#include <iostream>

#include "ch2geo/cli.hpp"

int main(int argc, char** argv) { return ch2geo::cli::main(argc, argv, std::cout, std::cerr); }
