#include <iostream>

#include "asymass/cli/cli.hpp"

int main(int argc, char** argv) { return asymass::cli_run(argc, argv, std::cout, std::cerr); }
