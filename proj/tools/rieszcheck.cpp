#include <iostream>

#include "rieszcheck/cli.hpp"

int main(int argc, char** argv) { return rieszcheck::run_cli(argc, argv, std::cout, std::cerr); }
