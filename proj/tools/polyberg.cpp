#include <iostream>

#include "polyberg/cli.hpp"

int main(int argc, char** argv) { return polyberg::run_cli(argc, argv, std::cout, std::cerr); }
