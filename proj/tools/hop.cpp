#include "hop/cli.hpp"

#include <iostream>

int main(int argc, char ** argv)
{
    return hop::run(argc, argv, std::cout, std::cerr);
}
