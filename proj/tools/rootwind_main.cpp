#include <iostream>

#include "rootwind/cli.hpp"

int main(int argc, char** argv) { return rootwind::run_cli(argc, argv, std::cout, std::cerr); }
