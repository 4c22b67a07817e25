#include <iostream>

#include "wracah/cli.hpp"

int main(int argc, char** argv) { return wracah::cli::run(argc, argv, std::cout, std::cerr); }
