#include <iostream>

#include "g2aa/cli.hpp"

int main(int argc, char** argv) { return g2aa::run_cli(argc, argv, std::cout, std::cerr); }
