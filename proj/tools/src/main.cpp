#include <iostream>

#include "qcoex_cli/cli.hpp"

int main(int argc, char** argv) { return qcoex::cli::run_cli(argc, argv, std::cout, std::cerr); }
