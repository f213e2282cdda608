#include <iostream>

#include "currents/cli.hpp"

int main(int argc, char** argv) { return currents::cli::main(argc, argv, std::cout, std::cerr); }
