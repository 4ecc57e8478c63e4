#include <iostream>

#include "btindex/cli.hpp"

int main(int argc, char** argv) { return btindex::cli::run(argc, argv, std::cout, std::cerr); }
