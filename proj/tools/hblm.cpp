#include <iostream>

#include "hblm/cli.hpp"

int main(int argc, char** argv) { return hblm::run_cli(argc, argv, std::cout, std::cerr); }
