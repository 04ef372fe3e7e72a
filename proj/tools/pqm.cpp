#include <iostream>

#include "pqm/cli.hpp"

int main(int argc, char** argv) {
    return pqm::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
