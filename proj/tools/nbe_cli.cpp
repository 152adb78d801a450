#include <iostream>

#include "nbe/cli/run.hpp"

int main(int argc, char** argv) { return nbe::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
