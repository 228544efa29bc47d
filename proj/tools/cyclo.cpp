#include <iostream>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) { return cyclo::main_entry(argc, argv, std::cout, std::cerr); }
