#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv)
{
    return lerch::tools::run(argc, argv, std::cout, std::cerr);
}
