#include <iostream>

#include "simplexcert/cli.hpp"

int main(int argc, char** argv) { return simplexcert::run_cli(argc, argv, std::cout, std::cerr); }
