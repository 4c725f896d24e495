#include <iostream>

#include "nestsum/cli/run.hpp"

int main(int argc, char** argv) { return nestsum::cli::run(argc, argv, std::cout, std::cerr); }
