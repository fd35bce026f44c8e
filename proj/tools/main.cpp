#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return fglab::cli::run(argc, argv, std::cout, std::cerr); }
