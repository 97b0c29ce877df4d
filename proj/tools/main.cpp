#include <iostream>

#include "conesum/cli.hpp"

int main(int argc, char** argv) { return conesum::run_cli(argc, argv, std::cout, std::cerr); }
