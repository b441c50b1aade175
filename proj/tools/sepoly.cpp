#include <iostream>

#include "sep/cli.hpp"

int main(int argc, char** argv) { return sep::cli::run(argc, argv, std::cout, std::cerr); }
