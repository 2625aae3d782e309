#include <iostream>

#include "weno/cli.hpp"

int main(int argc, char** argv) { return weno::cli_main({argv + 1, argv + argc}, std::cout, std::cerr); }
