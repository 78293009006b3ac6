#include <iostream>

#include "harmap/cli.hpp"

int main(int argc, char** argv) {
    return harmap::dispatch(argc, argv, std::cout, std::cerr);
}
