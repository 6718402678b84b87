#include "sozeta/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sozeta::run_cli(argc, argv, std::cout, std::cerr); }
