#include <iostream>

#include "seqsr_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return seqsr::cli::run(args, std::cout, std::cerr);
}
