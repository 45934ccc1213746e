#include <iostream>

#include "rst/cli/commands.hpp"

int main(int argc, char** argv) { return rst::cli::run(argc, argv, std::cout, std::cerr); }
