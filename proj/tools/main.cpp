#include "cli.hpp"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return vmr::cli::run(argc, argv, std::cout, std::cerr);
}
