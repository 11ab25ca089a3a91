#include <iostream>
#include <string>
#include <vector>

#include "k3zeta/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return k3zeta::run_cli(args, std::cout, std::cerr);
}
