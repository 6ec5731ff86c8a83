#include <iostream>

#include "mdpcc/cli.hpp"

int main(int argc, char** argv) {
    return mdpcc::run_cli(argc, argv, std::cout, std::cerr);
}
