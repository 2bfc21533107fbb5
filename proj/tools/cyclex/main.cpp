#include <iostream>

#include "harness.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return cyclex::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
