#include "novikov/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return novikov::run_cli(argc, argv, std::cout, std::cerr); }
