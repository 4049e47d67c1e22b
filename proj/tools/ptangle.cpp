#include <iostream>

#include "ptangle/cli.hpp"

int main(int argc, char** argv) { return ptangle::run_cli(argc, argv, std::cout, std::cerr); }
