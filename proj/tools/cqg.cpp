#include <iostream>

#include "cqg/cli.hpp"

int main(int argc, char** argv) {
    return cqg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
