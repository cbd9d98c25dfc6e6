#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return eur::cli::run(argc, argv, std::cout, std::cerr); }
