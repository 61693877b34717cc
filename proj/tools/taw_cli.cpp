#include <iostream>

#include "taw/cli.hpp"

int main(int argc, char** argv) { return taw::run_cli(argc, argv, std::cout, std::cerr); }
