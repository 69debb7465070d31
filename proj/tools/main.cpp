#include <iostream>

#include "magpath_cli.hpp"

int main(int argc, char** argv) { return magpath::cli::run(argc, argv, std::cout, std::cerr); }
