#include <iostream>

#include "ivt/cli.hpp"

int main(int argc, char **argv) { return ivt::run_cli(argc, argv, std::cout, std::cerr); }
