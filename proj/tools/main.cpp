#include <iostream>

#include "zhou/cli.hpp"

int main(int argc, char** argv) { return zhou::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
