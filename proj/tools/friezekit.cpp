#include <iostream>

#include "frieze/cli.hpp"

int main(int argc, char** argv) { return frieze::run(argc, argv, std::cout, std::cerr); }
