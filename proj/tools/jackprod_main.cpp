#include <iostream>

#include "jackprod/cli.hpp"

int main(int argc, char** argv) { return jackprod::cli::run(argc, argv, std::cout, std::cerr); }
