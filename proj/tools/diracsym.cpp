#include <iostream>

#include "diracsym/cli.hpp"

int main(int argc, char** argv) { return diracsym::cli::main(argc, argv, std::cout); }
