#include <iostream>

#include "circiso/cli.hpp"

int main(int argc, char** argv) { return circiso::cli::run(argc, argv, std::cout, std::cerr); }
