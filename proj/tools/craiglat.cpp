#include <iostream>

#include "craiglat/cli.hpp"

int main(int argc, char** argv) { return craiglat::cli::run(argc, argv, std::cout, std::cerr); }
