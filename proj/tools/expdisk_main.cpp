#include <iostream>

#include "expdisk/cli.hpp"

int main(int argc, char** argv) {
    return expdisk::run_cli(argc, argv, std::cout, std::cerr);
}
