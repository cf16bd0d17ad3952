#include <iostream>

#include "sqz_cli.hpp"

int main(int argc, char** argv) { return sqz::cli::main(argc, argv, std::cout, std::cerr); }
