#include <iostream>

#include "fakemu/cli/run.hpp"

int main(int argc, char** argv) {
    return fakemu::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
