#include <iostream>

#include "vrmat/cli.hpp"

int main(int argc, char** argv) {
    return vrmat::cli::run(argc, argv, std::cout, std::cerr);
}
