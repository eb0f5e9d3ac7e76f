#include "riders/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return riders::run(argc, argv, std::cout, std::cerr); }
