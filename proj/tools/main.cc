#include <iostream>

#include "gscforge/cli.h"

int main(int argc, char **argv) { return gscforge::cli_main(argc, argv, std::cout, std::cerr); }
