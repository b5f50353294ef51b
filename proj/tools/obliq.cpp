#include <iostream>

#include "obliq/cli.hpp"

int main(int argc, char** argv) { return obliq::run_cli(argc, argv, std::cout, std::cerr); }
