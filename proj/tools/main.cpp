#include <iostream>

#include "tperfect/cli.hpp"

int main(int argc, char** argv) { return tperfect::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr); }
