#include <iostream>

#include "efl/cli.hpp"

int main(int argc, char** argv) { return efl::run(argc, argv, std::cout, std::cerr); }
