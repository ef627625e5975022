#include <iostream>

#include "predomain/cli.hpp"

int main(int argc, char** argv) { return predomain::run_cli(argc, argv, std::cout, std::cerr); }
