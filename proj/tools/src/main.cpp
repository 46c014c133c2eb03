#include <iostream>

#include "ptrec/cli/commands.hpp"

int main(int argc, char** argv) { return ptrec::cli::run(argc, argv, std::cout, std::cerr); }
