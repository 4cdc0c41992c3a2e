#include <iostream>

#include "bdecat_cli/cli.hpp"

int main(int argc, char** argv) { return bdecat::cli::run(argc, argv, std::cout, std::cerr); }
