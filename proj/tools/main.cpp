#include <iostream>

#include "iwartin/cli.hpp"

int main(int argc, char** argv) { return iwartin::run_cli(argc, argv, std::cout, std::cerr); }
