#include <iostream>

#include "llull/cli.hpp"

int main(int argc, char** argv) { return llull::run_cli(argc, argv, std::cout, std::cerr); }
