#include <iostream>

#include "gradind/cli.hpp"

int main(int argc, char** argv)
{
    return gradind::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
