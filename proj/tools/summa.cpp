#include <iostream>

#include "summa/cli.hpp"

int main(int argc, char** argv) { return summa::cli::main(argc, argv, std::cout, std::cerr); }
