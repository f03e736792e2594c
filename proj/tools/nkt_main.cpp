#include <iostream>

#include "nkt/cli.hpp"

int main(int argc, char** argv) { return nkt::cli::run(argc, argv, std::cout, std::cerr); }
