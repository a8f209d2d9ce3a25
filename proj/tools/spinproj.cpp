#include "spinproj/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return spinproj::cli::run(argc, argv, std::cout, std::cerr); }
