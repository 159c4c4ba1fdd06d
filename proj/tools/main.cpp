#include <iostream>

#include "grpinv/cli/commands.hpp"

int main(int argc, char** argv) { return grpinv::cli::run(argc, argv, std::cout, std::cerr); }
