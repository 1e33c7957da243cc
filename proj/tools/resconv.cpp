#include <iostream>

#include "resconv/cli.hpp"

int main(int argc, char **argv) { return resconv::run(argc, argv, std::cout, std::cerr); }
