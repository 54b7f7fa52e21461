#include <iostream>

#include "qpr/cli/dispatch.hpp"

int main(int argc, char** argv) { return qpr::cli::run_cli(argc, argv, std::cout, std::cerr); }
