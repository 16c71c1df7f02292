#include <iostream>

#include "gts/cli.hpp"

int main(int argc, char** argv) {
    return gts::cli::run(argc, argv, std::cout, std::cerr);
}
