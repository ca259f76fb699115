#include "valinv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return valinv::cli::main_entry(argc, argv, std::cout, std::cerr); }
