#include <iostream>

#include "fsde/cli.hpp"

int main(int argc, char** argv) {
    return fsde::cli::main(argc, argv, std::cout, std::cerr);
}
