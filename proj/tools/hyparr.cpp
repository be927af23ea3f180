#include <iostream>
#include <string>
#include <vector>

#include "hyparr/cli.hpp"

int main(int argc, char** argv) {
    return hyparr::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
