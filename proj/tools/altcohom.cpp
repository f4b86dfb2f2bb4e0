#include <iostream>

#include "altcohom/cli.hpp"

int main(int argc, char** argv) { return altcohom::cli::run_cli(argc, argv, std::cout, std::cerr); }
