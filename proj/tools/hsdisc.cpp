#include <iostream>

#include "hsdisc/cli.hpp"

int main(int argc, char** argv) { return hsdisc::run_cli(argc, argv, std::cout, std::cerr); }
