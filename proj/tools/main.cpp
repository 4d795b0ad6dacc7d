#include <iostream>
#include <vector>

#include "leibcoh/cli.hpp"

int main(int argc, char** argv) {
    return leibcoh::run_command(std::vector<std::string>(argv + 1, argv + argc),
                                std::cout, std::cerr);
}
