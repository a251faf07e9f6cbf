#include <iostream>

#include "mixrec/cli.hpp"

int main(int argc, char** argv) { return mixrec::cli::run(argc, argv, std::cout, std::cerr); }
