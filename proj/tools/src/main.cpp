#include <iostream>

#include "kmarkov_cli/cli.hpp"

int main(int argc, char** argv) { return kmarkov::cli::run(argc, argv, std::cout, std::cerr); }
