#include <iostream>

#include "ballpoly/cli.hpp"

int main(int argc, char** argv) { return ballpoly::cli::run(argc, argv, std::cout, std::cerr); }
