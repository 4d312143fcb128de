#include <iostream>

#include "qslice/cli.hpp"

int main(int argc, char** argv) { return qslice::cli::run(argc, argv, std::cout, std::cerr); }
