#include <iostream>

#include "semiribbon/cli.hpp"

int main(int argc, char** argv) { return semiribbon::cli::run(argc, argv, std::cout, std::cerr); }
